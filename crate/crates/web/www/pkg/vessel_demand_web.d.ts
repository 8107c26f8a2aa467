/* tslint:disable */
/* eslint-disable */

/**
 * Demand curves for one scenario.
 */
export class DemandView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    classes(): string[];
    peak_kw(): number;
    peak_slots(): Uint32Array;
    /**
     * Class curves concatenated, 24 values per class in `classes()` order.
     */
    per_class_kw(): Float64Array;
    total_kw(): Float64Array;
}

/**
 * The synthetic dataset, filtered and binned once per page load.
 */
export class Explorer {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * 168 counts, Monday 00:00 first, row-major by weekday.
     */
    arrival_grid(_class: string): Uint32Array;
    call_counts(): Uint32Array;
    /**
     * Classes in descending call count.
     */
    classes(): string[];
    /**
     * `fractions` follow `classes()`. `aggregation` is `alldays` or `mon`..`sun`.
     */
    demand(fractions: Float64Array, slow_kw: number, slow_t1_h: number, slow_t2_h: number, rapid_kw: number, rapid_t1_h: number, rapid_t2_h: number, aggregation: string): DemandView;
    constructor(seed: bigint);
}

/**
 * One charging session: the power curve and its energy per hour slot.
 */
export class SessionView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    power_kw(): Float64Array;
    session_energy_kwh(): number;
    slot_energy_kwh(): Float64Array;
    times_h(): Float64Array;
}

export function charging_session(rated_kw: number, ramp_start_h: number, ramp_end_h: number, start_slot: number): SessionView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demandview_free: (a: number, b: number) => void;
    readonly __wbg_explorer_free: (a: number, b: number) => void;
    readonly __wbg_sessionview_free: (a: number, b: number) => void;
    readonly charging_session: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly demandview_classes: (a: number) => [number, number];
    readonly demandview_peak_kw: (a: number) => number;
    readonly demandview_peak_slots: (a: number) => [number, number];
    readonly demandview_per_class_kw: (a: number) => [number, number];
    readonly demandview_total_kw: (a: number) => [number, number];
    readonly explorer_arrival_grid: (a: number, b: number, c: number) => [number, number, number, number];
    readonly explorer_call_counts: (a: number) => [number, number];
    readonly explorer_classes: (a: number) => [number, number];
    readonly explorer_demand: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number, k: number) => [number, number, number];
    readonly explorer_new: (a: bigint) => [number, number, number];
    readonly sessionview_power_kw: (a: number) => [number, number];
    readonly sessionview_session_energy_kwh: (a: number) => number;
    readonly sessionview_slot_energy_kwh: (a: number) => [number, number];
    readonly sessionview_times_h: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
