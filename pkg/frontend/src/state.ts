/** Control state and its projection into a /whatif request. */

import type { ContextSelector, HarmClass, WhatIfRequest } from './types.js';

export interface ControlState {
  w: number;
  r: number;
  t: number;
  context: ContextSelector;
  privacyLevels: number[];
  harmClass: HarmClass;
}

export const INITIAL_STATE: ControlState = {
  w: 0.25,
  r: 1.0,
  t: 0.0,
  context: 'tolerant',
  privacyLevels: [1, 2, 3],
  harmClass: 'unknown',
};

export function toWhatIfRequest(state: ControlState): WhatIfRequest {
  return {
    schema_version: 1,
    function: { w: state.w, r: state.r, t: state.t },
    context: state.context,
    privacy_levels: [...state.privacyLevels].sort((a, b) => a - b),
    harm_class: state.harmClass,
  };
}
