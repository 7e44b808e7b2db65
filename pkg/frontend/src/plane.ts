/**
 * SVG rendering of the plane view model.
 *
 * Pure string-in/string-out so it can be unit-tested without a DOM; the
 * page assigns the result to a container's innerHTML.
 */

import type { PlaneViewModel } from './viewmodel.js';

const SCALE = 280;
const MARGIN = 48;

const DEPLOY_COLOR = '#2e7d52';
const NOT_DEPLOY_COLOR = '#b23a3a';

function fmt(value: number): string {
  return value.toFixed(2);
}

export function renderPlaneSVG(vm: PlaneViewModel): string {
  const width = vm.hMax * SCALE + 2 * MARGIN;
  const height = vm.pMax * SCALE + 2 * MARGIN;
  const x = (h: number) => MARGIN + h * SCALE;
  const y = (p: number) => MARGIN + (vm.pMax - p) * SCALE;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${fmt(width)} ${fmt(height)}" ` +
      `class="plane" role="img" aria-label="proportionality plane">`,
  );

  for (const block of vm.blocks) {
    const color = block.deploy ? DEPLOY_COLOR : NOT_DEPLOY_COLOR;
    const opacity = 0.12 + 0.58 * block.fillFraction;
    const cls = [
      'block',
      block.deploy ? 'deploy' : 'not-deploy',
      block.applicable ? 'applicable' : 'inactive',
    ].join(' ');
    parts.push(
      `<rect class="${cls}" data-cell="p${block.privacyLevel}h${block.harmLevel}" ` +
        `x="${fmt(x(block.hLo))}" y="${fmt(y(block.pHi))}" ` +
        `width="${fmt((block.hHi - block.hLo) * SCALE)}" ` +
        `height="${fmt((block.pHi - block.pLo) * SCALE)}" ` +
        `fill="${color}" fill-opacity="${opacity.toFixed(3)}" stroke="#333" stroke-width="1"/>`,
    );
    const label = block.deploy ? 'deploy' : 'not deploy';
    const frontier =
      block.frontierW === null ? 'frontier: unreachable' : `frontier w = ${block.frontierW.toFixed(4)}`;
    parts.push(
      `<text class="block-label" x="${fmt(x(block.hLo) + 6)}" y="${fmt(y(block.pHi) + 15)}">` +
        `p${block.privacyLevel}h${block.harmLevel} · ${label}</text>`,
    );
    parts.push(
      `<text class="block-frontier" x="${fmt(x(block.hLo) + 6)}" y="${fmt(y(block.pHi) + 29)}">` +
        `${frontier}</text>`,
    );
  }

  if (vm.showCurve && vm.curve.length > 0) {
    const clamp = (p: number) => Math.min(Math.max(p, 0), vm.pMax);
    const points = vm.curve.map(([h, s]) => `${fmt(x(h))},${fmt(y(clamp(s)))}`).join(' ');
    parts.push(
      `<polyline class="curve" points="${points}" fill="none" stroke="#1a4d8f" stroke-width="2"/>`,
    );
  }

  parts.push(
    `<rect class="frame" x="${fmt(x(0))}" y="${fmt(y(vm.pMax))}" ` +
      `width="${fmt(vm.hMax * SCALE)}" height="${fmt(vm.pMax * SCALE)}" ` +
      `fill="none" stroke="#000" stroke-width="1.5"/>`,
  );
  parts.push(
    `<text class="axis-x" x="${fmt(x(vm.hMax / 2))}" y="${fmt(height - 10)}" ` +
      `text-anchor="middle">Security Harm</text>`,
  );
  parts.push(
    `<text class="axis-y" x="14" y="${fmt(y(vm.pMax / 2))}" text-anchor="middle" ` +
      `transform="rotate(-90 14 ${fmt(y(vm.pMax / 2))})">Privacy Loss</text>`,
  );
  parts.push('</svg>');
  return parts.join('\n');
}
