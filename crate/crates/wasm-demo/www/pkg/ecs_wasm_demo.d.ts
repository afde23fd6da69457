/* tslint:disable */
/* eslint-disable */

export class Classification {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly verdict: string;
    class_a_residual: number;
    class_b_residual: number;
    concurrence: number;
    separability_residual: number;
}

export function classify_state(lambda: number, rho: number, nu: number, x: number, tol: number): Classification;

/**
 * Concurrence sampled at `x = (i + 1/2) / steps`.
 */
export function concurrence_curve(lambda: number, rho: number, nu: number, steps: number): Float64Array;

/**
 * Row-major `steps x steps` concurrence values. Columns run over lambda from
 * `min` to `max`, rows over rho from `max` down to `min` (image orientation).
 */
export function concurrence_heatmap(nu: number, x: number, min: number, max: number, steps: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_classification_free: (a: number, b: number) => void;
    readonly __wbg_get_classification_class_a_residual: (a: number) => number;
    readonly __wbg_get_classification_class_b_residual: (a: number) => number;
    readonly __wbg_get_classification_concurrence: (a: number) => number;
    readonly __wbg_get_classification_separability_residual: (a: number) => number;
    readonly __wbg_set_classification_class_a_residual: (a: number, b: number) => void;
    readonly __wbg_set_classification_class_b_residual: (a: number, b: number) => void;
    readonly __wbg_set_classification_concurrence: (a: number, b: number) => void;
    readonly __wbg_set_classification_separability_residual: (a: number, b: number) => void;
    readonly classification_verdict: (a: number) => [number, number];
    readonly classify_state: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly concurrence_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly concurrence_heatmap: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
