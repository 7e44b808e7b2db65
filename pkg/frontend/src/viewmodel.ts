/**
 * View model for the plane: a direct, lossless projection of the
 * /whatif response. No client-side recomputation — fill fractions,
 * decisions and frontier markers are the server's.
 */

import type { MatrixCell, OverallValue, WhatIfResponse } from './types.js';

export interface BlockView {
  privacyLevel: number;
  harmLevel: number;
  hLo: number;
  hHi: number;
  pLo: number;
  pHi: number;
  fillFraction: number;
  deploy: boolean;
  applicable: boolean;
  frontierW: number | null;
}

export interface PlaneViewModel {
  hMax: number;
  pMax: number;
  contextName: string;
  hwRatio: number;
  overall: OverallValue;
  ladderLevel: string;
  ladderRationale: string;
  blocks: BlockView[];
  /** curve samples straight from the server; empty when out of plane */
  curve: [number, number][];
  showCurve: boolean;
}

function toBlockView(cell: MatrixCell): BlockView {
  return {
    privacyLevel: cell.privacy_level,
    harmLevel: cell.harm_level,
    hLo: cell.block.h_lo,
    hHi: cell.block.h_hi,
    pLo: cell.block.p_lo,
    pHi: cell.block.p_hi,
    fillFraction: cell.fill_fraction,
    deploy: cell.decision === 'deploy',
    applicable: cell.applicable,
    frontierW: cell.frontier_w,
  };
}

export function buildViewModel(response: WhatIfResponse): PlaneViewModel {
  const blocks = response.matrix.map(toBlockView);
  const hMax = Math.max(...blocks.map((b) => b.hHi));
  const pMax = Math.max(...blocks.map((b) => b.pHi));
  const outOfPlane = response.overall === 'out-of-plane';
  return {
    hMax,
    pMax,
    contextName: response.context.name,
    hwRatio: response.context.hw_ratio,
    overall: response.overall,
    ladderLevel: response.ladder_fallback.level,
    ladderRationale: response.ladder_fallback.rationale,
    blocks,
    // out of plane: the grid stays visible but the curve overlay is disabled
    curve: outOfPlane ? [] : response.curve,
    showCurve: !outOfPlane,
  };
}

/** Banner text for states that need explaining; null when the plane speaks for itself. */
export function bannerFor(vm: PlaneViewModel): string | null {
  if (vm.overall === 'out-of-plane') {
    return (
      'Out of plane: the threat never reaches the harm scale, so face recognition ' +
      `is not proportional here. Fallback: ${vm.ladderLevel}.`
    );
  }
  return null;
}

/** The set of deploy-shaded cells, for display and for contract tests. */
export function deployShadedCells(vm: PlaneViewModel): Array<[number, number]> {
  return vm.blocks
    .filter((b) => b.deploy)
    .map((b) => [b.privacyLevel, b.harmLevel] as [number, number])
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
}
