/* tslint:disable */
/* eslint-disable */

/**
 * Spectrum samples plus the peak classification.
 */
export class SpectrumView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly a: number;
    readonly density: Float64Array;
    readonly g: number;
    readonly omega_frac: Float64Array;
    readonly peak_positions: Float64Array;
    readonly shape: string;
}

export function logRhoMap(xi_min: number, xi_max: number, xi_points: number, zeta_min: number, zeta_max: number, zeta_points: number): Float64Array;

export function rateCut(xi: number, zeta_min: number, zeta_max: number, points: number): Float64Array;

/**
 * `ζ` at which `ρ(ξ, ·)` peaks, or NaN when there is none.
 */
export function resonanceZeta(xi: number): number;

export function spectrum(xi: number, zeta: number, points: number): SpectrumView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_spectrumview_free: (a: number, b: number) => void;
    readonly logRhoMap: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly rateCut: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly resonanceZeta: (a: number) => number;
    readonly spectrum: (a: number, b: number, c: number) => [number, number, number];
    readonly spectrumview_a: (a: number) => number;
    readonly spectrumview_density: (a: number) => [number, number];
    readonly spectrumview_g: (a: number) => number;
    readonly spectrumview_omega_frac: (a: number) => [number, number];
    readonly spectrumview_peak_positions: (a: number) => [number, number];
    readonly spectrumview_shape: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
