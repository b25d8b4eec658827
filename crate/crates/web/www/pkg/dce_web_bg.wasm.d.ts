/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_spectrumview_free: (a: number, b: number) => void;
export const logRhoMap: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const rateCut: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const resonanceZeta: (a: number) => number;
export const spectrum: (a: number, b: number, c: number) => [number, number, number];
export const spectrumview_a: (a: number) => number;
export const spectrumview_density: (a: number) => [number, number];
export const spectrumview_g: (a: number) => number;
export const spectrumview_omega_frac: (a: number) => [number, number];
export const spectrumview_peak_positions: (a: number) => [number, number];
export const spectrumview_shape: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
