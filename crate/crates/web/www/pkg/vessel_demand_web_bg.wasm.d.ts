/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demandview_free: (a: number, b: number) => void;
export const __wbg_explorer_free: (a: number, b: number) => void;
export const __wbg_sessionview_free: (a: number, b: number) => void;
export const charging_session: (a: number, b: number, c: number, d: number) => [number, number, number];
export const demandview_classes: (a: number) => [number, number];
export const demandview_peak_kw: (a: number) => number;
export const demandview_peak_slots: (a: number) => [number, number];
export const demandview_per_class_kw: (a: number) => [number, number];
export const demandview_total_kw: (a: number) => [number, number];
export const explorer_arrival_grid: (a: number, b: number, c: number) => [number, number, number, number];
export const explorer_call_counts: (a: number) => [number, number];
export const explorer_classes: (a: number) => [number, number];
export const explorer_demand: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number, k: number) => [number, number, number];
export const explorer_new: (a: bigint) => [number, number, number];
export const sessionview_power_kw: (a: number) => [number, number];
export const sessionview_session_energy_kwh: (a: number) => number;
export const sessionview_slot_energy_kwh: (a: number) => [number, number];
export const sessionview_times_h: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
