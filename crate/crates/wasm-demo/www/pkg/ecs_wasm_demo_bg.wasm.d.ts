/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_classification_free: (a: number, b: number) => void;
export const __wbg_get_classification_class_a_residual: (a: number) => number;
export const __wbg_get_classification_class_b_residual: (a: number) => number;
export const __wbg_get_classification_concurrence: (a: number) => number;
export const __wbg_get_classification_separability_residual: (a: number) => number;
export const __wbg_set_classification_class_a_residual: (a: number, b: number) => void;
export const __wbg_set_classification_class_b_residual: (a: number, b: number) => void;
export const __wbg_set_classification_concurrence: (a: number, b: number) => void;
export const __wbg_set_classification_separability_residual: (a: number, b: number) => void;
export const classification_verdict: (a: number) => [number, number];
export const classify_state: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const concurrence_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const concurrence_heatmap: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
