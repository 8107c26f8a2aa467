#!/usr/bin/env python3
"""Session-by-session demand for a port-call CSV, independent of the Rust code.

Every surviving call starts one charging session at the top of its arrival
hour. Each session's power curve is integrated hour by hour with the
midpoint rule and the energy is binned by hour of day. Dividing by the
number of days in the window gives the mean demand of a representative day.

    python3 scripts/brute_force_demand.py data/synthetic_2019.csv > data/golden_demand.json
"""
import csv
import datetime as dt
import json
import sys
from collections import Counter

import numpy as np

WINDOW = (dt.date(2019, 1, 1), dt.date(2019, 12, 31))
MAX_LENGTH = 25.0
MIN_FREQ = 500
SLOW = (75.0, 3.0, 4.0)
RAPID = (150.0, 1.0, 1.0)
POLICY = {
    "Fishing vessel": SLOW,
    "Trawler": SLOW,
    "Yacht": SLOW,
    "Sailing ship": SLOW,
    "Pusher/Tug": RAPID,
}
STEPS_PER_HOUR = 1000


def power(profile, t):
    p, t1, t2 = profile
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    const = (t > 0) & (t <= t1)
    out[const] = p
    if t2 > t1:
        ramp = (t > t1) & (t <= t2)
        out[ramp] = p * (t2 - t[ramp]) / (t2 - t1)
    return out


def session_hours(profile):
    """Energy in each elapsed hour of one session, by the midpoint rule."""
    hours = int(np.ceil(profile[2]))
    h = 1.0 / STEPS_PER_HOUR
    energies = []
    for k in range(hours):
        mids = k + (np.arange(STEPS_PER_HOUR) + 0.5) * h
        energies.append(float(power(profile, mids).sum() * h))
    return energies


def main(path):
    rows = []
    with open(path, newline="") as f:
        for rec in csv.DictReader(f):
            ts = dt.datetime.strptime(rec["arrival_utc"], "%Y-%m-%dT%H:%M:%SZ")
            if not (WINDOW[0] <= ts.date() <= WINDOW[1]):
                continue
            if float(rec["length_m"]) >= MAX_LENGTH:
                continue
            rows.append((rec["vessel_type"], ts))
    freq = Counter(c for c, _ in rows)
    rows = [(c, ts) for c, ts in rows if freq[c] >= MIN_FREQ]

    days = (WINDOW[1] - WINDOW[0]).days + 1
    per_class = {c: np.zeros(24) for c in sorted({c for c, _ in rows})}
    for cls, ts in rows:
        for k, e in enumerate(session_hours(POLICY[cls])):
            per_class[cls][(ts.hour + k) % 24] += e
    total = np.zeros(24)
    for cls in per_class:
        per_class[cls] /= days
        total += per_class[cls]
    peak = float(total.max())
    json.dump(
        {
            "source": path,
            "sessions": len(rows),
            "days": days,
            "per_class_kw": {c: v.tolist() for c, v in per_class.items()},
            "total_kw": total.tolist(),
            "peak_kw": peak,
            "peak_slots": [int(h) for h in np.flatnonzero(total == peak)],
        },
        sys.stdout,
        indent=2,
    )
    sys.stdout.write("\n")


if __name__ == "__main__":
    main(sys.argv[1])
