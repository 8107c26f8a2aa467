import init, { Explorer, charging_session } from "./pkg/vessel_demand_web.js";

const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];
const DAYS = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"];

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function showError(e) {
  $("error").textContent = e ? String(e) : "";
}

function bindOutputs(root) {
  for (const input of root.querySelectorAll("input[type=range]")) {
    const out = input.parentElement.querySelector("output");
    const sync = () => { if (out) out.textContent = input.value; };
    input.addEventListener("input", sync);
    sync();
  }
}

function axes(ctx, w, h, pad, xMax, yMax, xTicks, yLabel) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#ccc";
  ctx.fillStyle = "#444";
  ctx.font = "11px sans-serif";
  ctx.lineWidth = 1;
  for (let i = 0; i <= 4; i++) {
    const y = pad.t + (h - pad.t - pad.b) * (1 - i / 4);
    ctx.beginPath(); ctx.moveTo(pad.l, y); ctx.lineTo(w - pad.r, y); ctx.stroke();
    ctx.textAlign = "right";
    ctx.fillText((yMax * i / 4).toFixed(yMax < 10 ? 1 : 0), pad.l - 4, y + 4);
  }
  ctx.textAlign = "center";
  for (const t of xTicks) {
    const x = pad.l + (w - pad.l - pad.r) * t / xMax;
    ctx.fillText(String(t), x, h - pad.b + 14);
  }
  ctx.save();
  ctx.translate(12, pad.t + (h - pad.t - pad.b) / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();
  const sx = (x) => pad.l + (w - pad.l - pad.r) * x / xMax;
  const sy = (y) => pad.t + (h - pad.t - pad.b) * (1 - y / yMax);
  return { sx, sy };
}

function niceMax(v) {
  if (!(v > 0)) return 1;
  const mag = 10 ** Math.floor(Math.log10(v));
  for (const s of [1, 2, 2.5, 5, 10]) if (s * mag >= v) return s * mag;
  return 10 * mag;
}

function stepLine(ctx, sx, sy, values, colour, width) {
  ctx.strokeStyle = colour;
  ctx.lineWidth = width;
  ctx.beginPath();
  values.forEach((v, h) => {
    if (h === 0) ctx.moveTo(sx(h), sy(v)); else ctx.lineTo(sx(h), sy(v));
    ctx.lineTo(sx(h + 1), sy(v));
  });
  ctx.stroke();
}

function drawSession() {
  let view;
  try {
    view = charging_session(num("s-kw"), num("s-t1"), num("s-t2"), num("s-start"));
    showError(null);
  } catch (e) {
    showError(e);
    return;
  }
  const t = view.times_h(), p = view.power_kw();
  let c = $("session-power"), ctx = c.getContext("2d");
  const pad = { l: 48, r: 10, t: 10, b: 24 };
  const tMax = t[t.length - 1];
  const ticks = [...Array(Math.floor(tMax) + 1).keys()];
  let { sx, sy } = axes(ctx, c.width, c.height, pad, tMax, niceMax(num("s-kw")), ticks, "kW");
  ctx.strokeStyle = PALETTE[0]; ctx.lineWidth = 2; ctx.beginPath();
  t.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(p[i])) : ctx.moveTo(sx(x), sy(p[i]))));
  ctx.stroke();

  const slots = view.slot_energy_kwh();
  c = $("session-slots"); ctx = c.getContext("2d");
  ({ sx, sy } = axes(ctx, c.width, c.height, pad, 24, niceMax(Math.max(...slots)), [0, 6, 12, 18, 24], "kWh per slot"));
  ctx.fillStyle = PALETTE[1];
  slots.forEach((e, h) => { if (e > 0) ctx.fillRect(sx(h) + 1, sy(e), sx(1) - sx(0) - 2, sy(0) - sy(e)); });
  $("session-info").textContent = `session energy ${view.session_energy_kwh().toFixed(2)} kWh`;
  view.free();
}

function drawArrivals(explorer) {
  const cls = $("a-class").value;
  const grid = explorer.arrival_grid(cls);
  const c = $("arrivals"), ctx = c.getContext("2d");
  ctx.clearRect(0, 0, c.width, c.height);
  const left = 40, top = 8, cw = (c.width - left - 10) / 24, ch = (c.height - top - 22) / 7;
  const max = Math.max(1, ...grid);
  ctx.font = "11px sans-serif";
  for (let d = 0; d < 7; d++) {
    ctx.fillStyle = "#444"; ctx.textAlign = "right";
    ctx.fillText(DAYS[d], left - 6, top + ch * d + ch / 2 + 4);
    for (let h = 0; h < 24; h++) {
      const n = grid[d * 24 + h];
      const a = n / max;
      ctx.fillStyle = `rgba(31, 119, 180, ${0.06 + 0.94 * a})`;
      ctx.fillRect(left + h * cw + 1, top + d * ch + 1, cw - 2, ch - 2);
      if (n > 0) {
        ctx.fillStyle = a > 0.55 ? "#fff" : "#333"; ctx.textAlign = "center";
        ctx.fillText(String(n), left + h * cw + cw / 2, top + d * ch + ch / 2 + 4);
      }
    }
  }
  ctx.fillStyle = "#444"; ctx.textAlign = "center";
  for (let h = 0; h < 24; h += 3) ctx.fillText(String(h), left + h * cw + cw / 2, c.height - 6);
}

function drawDemand(explorer, classes) {
  const fractions = new Float64Array(classes.map((_, i) => num(`f-${i}`) / 100));
  let view;
  try {
    view = explorer.demand(fractions, num("d-slow-kw"), num("d-slow-t1"), num("d-slow-t2"),
      num("d-rapid-kw"), 1, 1, $("d-agg").value);
    showError(null);
  } catch (e) {
    showError(e);
    return;
  }
  const names = view.classes(), per = view.per_class_kw(), total = view.total_kw();
  const c = $("demand"), ctx = c.getContext("2d");
  const pad = { l: 56, r: 150, t: 10, b: 24 };
  const { sx, sy } = axes(ctx, c.width, c.height, pad, 24, niceMax(view.peak_kw()), [0, 3, 6, 9, 12, 15, 18, 21, 24], "kW");
  const series = names.map((n, i) => [n, per.slice(i * 24, i * 24 + 24), PALETTE[i % PALETTE.length], 1.5]);
  series.push(["Total", total, "#000", 2.5]);
  series.forEach(([name, values, colour, width], i) => {
    stepLine(ctx, sx, sy, values, colour, width);
    const y = pad.t + 10 + 18 * i;
    ctx.strokeStyle = colour; ctx.lineWidth = width;
    ctx.beginPath(); ctx.moveTo(c.width - pad.r + 12, y); ctx.lineTo(c.width - pad.r + 30, y); ctx.stroke();
    ctx.fillStyle = "#333"; ctx.textAlign = "left"; ctx.fillText(name, c.width - pad.r + 36, y + 4);
  });
  const slots = Array.from(view.peak_slots(), (h) => `${String(h).padStart(2, "0")}:00`).join(", ");
  const energy = total.reduce((a, b) => a + b, 0);
  $("demand-info").textContent =
    `peak ${view.peak_kw().toFixed(1)} kW (${(view.peak_kw() / 1000).toFixed(3)} MW) at ${slots}; ` +
    `daily energy ${(energy / 1000).toFixed(2)} MWh`;
  view.free();
}

async function main() {
  await init();
  const explorer = new Explorer(42n);
  const classes = explorer.classes();
  const counts = explorer.call_counts();

  const select = $("a-class");
  classes.forEach((cls, i) => select.add(new Option(`${cls} (${counts[i]})`, cls)));
  select.addEventListener("change", () => drawArrivals(explorer));

  const fr = $("fractions");
  classes.forEach((cls, i) => {
    const label = document.createElement("label");
    label.innerHTML = `${cls} (%) <input id="f-${i}" type="range" min="0" max="100" step="5" value="100"><output></output>`;
    fr.appendChild(label);
  });

  bindOutputs(document);
  for (const id of ["s-kw", "s-t1", "s-t2", "s-start"]) $(id).addEventListener("input", drawSession);
  const redraw = () => drawDemand(explorer, classes);
  for (const el of document.querySelectorAll("#fractions input, [id^=d-]")) el.addEventListener("input", redraw);

  drawSession();
  drawArrivals(explorer);
  redraw();
}

main().catch(showError);
