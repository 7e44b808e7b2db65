/**
 * Wire types mirroring the frplane HTTP service.
 *
 * The console never recomputes an area or a decision: every field here
 * is consumed verbatim from the server, which is the single tested
 * implementation of the plane math.
 */

export type DecisionValue = 'deploy' | 'not-deploy';
export type OverallValue = 'intervention' | 'non-intervention' | 'out-of-plane';
export type HarmClass = 2 | 3 | 'material-only' | 'unknown';
export type ContextSelector = string | number;

export interface FunctionParams {
  w: number;
  r: number;
  t: number;
}

export interface WhatIfRequest {
  schema_version: number;
  function: FunctionParams;
  context: ContextSelector;
  privacy_levels: number[];
  harm_class: HarmClass;
}

export interface BlockExtents {
  h_lo: number;
  h_hi: number;
  p_lo: number;
  p_hi: number;
}

export interface MatrixCell {
  privacy_level: number;
  harm_level: number;
  block: BlockExtents;
  b_l: number;
  b_r: number;
  fill_fraction: number;
  decision: DecisionValue;
  frontier_w: number | null;
  applicable: boolean;
}

export interface LadderInfo {
  level: string;
  rationale: string;
}

export interface WhatIfResponse {
  schema_version: number;
  context: { name: string; hw_ratio: number };
  function: FunctionParams;
  overall: OverallValue;
  ladder_fallback: LadderInfo;
  matrix: MatrixCell[];
  curve: [number, number][];
}

export interface ContextPreset {
  name: string;
  hw_ratio: number;
}

export interface ContextsResponse {
  schema_version: number;
  contexts: ContextPreset[];
}

export interface FieldError {
  field: string;
  reason: string;
}

export interface ErrorResponse {
  schema_version: number;
  errors: FieldError[];
}
