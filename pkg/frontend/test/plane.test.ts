import { describe, expect, it } from 'vitest';

import { renderPlaneSVG } from '../src/plane.js';
import { buildViewModel } from '../src/viewmodel.js';
import type { WhatIfResponse } from '../src/types.js';

import fig6 from './fixtures/whatif-fig6-left.json';
import brondby from './fixtures/whatif-brondby.json';

const fig6Vm = buildViewModel(fig6 as unknown as WhatIfResponse);
const brondbyVm = buildViewModel(brondby as unknown as WhatIfResponse);

function deployCellsInSVG(svg: string): string[] {
  const cells: string[] = [];
  const re = /<rect class="block deploy[^"]*" data-cell="([^"]+)"/g;
  for (const match of svg.matchAll(re)) {
    cells.push(match[1]);
  }
  return cells.sort();
}

describe('renderPlaneSVG', () => {
  it('draws six blocks and the frame', () => {
    const svg = renderPlaneSVG(fig6Vm);
    expect((svg.match(/<rect class="block/g) ?? []).length).toBe(6);
    expect(svg).toContain('class="frame"');
    expect(svg).toContain('Security Harm');
    expect(svg).toContain('Privacy Loss');
  });

  it('shades exactly the deploy blocks of the view model', () => {
    const svg = renderPlaneSVG(fig6Vm);
    expect(deployCellsInSVG(svg)).toEqual(['p1h1', 'p1h2', 'p2h2']);
  });

  it('overlays the curve for in-plane states', () => {
    expect(renderPlaneSVG(fig6Vm)).toContain('<polyline class="curve"');
  });

  it('omits the curve when out of plane', () => {
    expect(renderPlaneSVG(brondbyVm)).not.toContain('<polyline');
  });

  it('prints frontier markers from the server, never recomputed', () => {
    const svg = renderPlaneSVG(fig6Vm);
    for (const block of fig6Vm.blocks) {
      if (block.frontierW !== null) {
        expect(svg).toContain(`frontier w = ${block.frontierW.toFixed(4)}`);
      }
    }
    // the top-left cell cannot deploy at any probability on this grid
    expect(svg).toContain('frontier: unreachable');
  });

  it('is deterministic for the same view model', () => {
    expect(renderPlaneSVG(fig6Vm)).toBe(renderPlaneSVG(fig6Vm));
  });
});
