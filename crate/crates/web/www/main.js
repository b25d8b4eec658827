import init, { spectrum, logRhoMap, rateCut, resonanceZeta } from "./pkg/dce_web.js";

const XI = [0.2, 3];
const ZETA = [0, 150];
const MAP = { nx: 112, nz: 150 };
const CUT_POINTS = 151;
const PAD = { l: 56, r: 12, t: 12, b: 36 };

const $ = (id) => document.getElementById(id);
const xiInput = $("xi");
const zetaInput = $("zeta");

function frame(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const w = canvas.width - PAD.l - PAD.r;
  const h = canvas.height - PAD.t - PAD.b;
  return { ctx, w, h };
}

function axes(ctx, w, h, xLabel, yLabel, xRange, yRange) {
  ctx.strokeStyle = "#888";
  ctx.strokeRect(PAD.l, PAD.t, w, h);
  ctx.fillStyle = "#333";
  ctx.font = "12px system-ui";
  ctx.textAlign = "center";
  ctx.fillText(xLabel, PAD.l + w / 2, PAD.t + h + 30);
  ctx.fillText(xRange[0].toPrecision(3), PAD.l, PAD.t + h + 14);
  ctx.fillText(xRange[1].toPrecision(3), PAD.l + w, PAD.t + h + 14);
  ctx.textAlign = "right";
  ctx.fillText(yRange[1].toPrecision(3), PAD.l - 4, PAD.t + 10);
  ctx.fillText(yRange[0].toPrecision(3), PAD.l - 4, PAD.t + h);
  ctx.save();
  ctx.translate(14, PAD.t + h / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.textAlign = "center";
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();
}

function polyline(ctx, xs, ys, sx, sy, color) {
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(ys[i])) : ctx.moveTo(sx(x), sy(ys[i]))));
  ctx.stroke();
}

function drawSpectrum(xi, zeta) {
  const s = spectrum(xi, zeta, 1001);
  const x = s.omega_frac;
  const y = s.density;
  const top = Math.max(...y) * 1.05 || 1;
  const { ctx, w, h } = frame($("spectrum"));
  const sx = (v) => PAD.l + v * w;
  const sy = (v) => PAD.t + h - (v / top) * h;
  axes(ctx, w, h, "ω/ω₀", "N", [0, 1], [0, top]);
  polyline(ctx, x, y, sx, sy, "#1f5fbf");
  ctx.fillStyle = "#c33";
  for (const p of s.peak_positions) {
    ctx.fillRect(sx(p) - 1, PAD.t, 2, h);
  }
  $("shape").textContent =
    `Shape: ${s.shape}, A = ${s.a.toPrecision(4)}, g = ${s.g.toPrecision(4)}.`;
  s.free();
}

// ρ map is fixed, so render it once into an offscreen canvas.
let mapImage = null;

function viridisish(t) {
  const r = Math.round(255 * Math.min(1, Math.max(0, 1.6 * t - 0.4)));
  const g = Math.round(255 * Math.min(1, Math.max(0, Math.sin(Math.PI * t * 0.9))));
  const b = Math.round(255 * Math.min(1, Math.max(0, 1 - 1.4 * t)));
  return [r, g, b];
}

function buildMap() {
  const vals = logRhoMap(XI[0], XI[1], MAP.nx, ZETA[0], ZETA[1], MAP.nz);
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of vals) {
    lo = Math.min(lo, v);
    hi = Math.max(hi, v);
  }
  const off = document.createElement("canvas");
  off.width = MAP.nz;
  off.height = MAP.nx;
  const octx = off.getContext("2d");
  const img = octx.createImageData(MAP.nz, MAP.nx);
  // Rows are ξ (drawn bottom to top), columns are ζ.
  for (let i = 0; i < MAP.nx; i++) {
    for (let j = 0; j < MAP.nz; j++) {
      const [r, g, b] = viridisish((vals[i * MAP.nz + j] - lo) / (hi - lo));
      const k = 4 * ((MAP.nx - 1 - i) * MAP.nz + j);
      img.data.set([r, g, b, 255], k);
    }
  }
  octx.putImageData(img, 0, 0);
  mapImage = { canvas: off, lo, hi };
}

function drawMap(xi, zeta) {
  const { ctx, w, h } = frame($("rho-map"));
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(mapImage.canvas, PAD.l, PAD.t, w, h);
  axes(ctx, w, h, `ζ   (log₁₀ ρ from ${mapImage.lo.toFixed(1)} to ${mapImage.hi.toFixed(1)})`, "ξ", ZETA, XI);
  const px = PAD.l + ((zeta - ZETA[0]) / (ZETA[1] - ZETA[0])) * w;
  const py = PAD.t + h - ((xi - XI[0]) / (XI[1] - XI[0])) * h;
  ctx.strokeStyle = "#fff";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.arc(px, py, 5, 0, 2 * Math.PI);
  ctx.stroke();
}

const cutZetas = Array.from({ length: CUT_POINTS }, (_, k) => ZETA[0] + (k * (ZETA[1] - ZETA[0])) / (CUT_POINTS - 1));
// The cut depends on ξ only, so moving ζ reuses the last quadrature run.
let cut = { xi: null, logs: [] };

function drawRate(xi, zeta) {
  if (cut.xi !== xi) {
    cut = { xi, logs: Array.from(rateCut(xi, ZETA[0], ZETA[1], CUT_POINTS), Math.log10) };
  }
  const zs = cutZetas;
  const logs = cut.logs;
  const lo = Math.min(...logs);
  const hi = Math.max(...logs) + 0.1;
  const { ctx, w, h } = frame($("rate"));
  const sx = (v) => PAD.l + ((v - ZETA[0]) / (ZETA[1] - ZETA[0])) * w;
  const sy = (v) => PAD.t + h - ((v - lo) / (hi - lo)) * h;
  axes(ctx, w, h, "ζ", "log₁₀ R/R(1,1)", ZETA, [lo, hi]);
  polyline(ctx, zs, logs, sx, sy, "#2a8f3c");
  ctx.fillStyle = "#c33";
  ctx.fillRect(sx(zeta) - 1, PAD.t, 2, h);
}

let pending = false;

function update() {
  if (pending) return;
  pending = true;
  requestAnimationFrame(() => {
    pending = false;
    const xi = Number(xiInput.value);
    const zeta = Number(zetaInput.value);
    $("xi-out").textContent = xi.toFixed(2);
    $("zeta-out").textContent = zeta.toFixed(1);
    try {
      drawSpectrum(xi, zeta);
      drawMap(xi, zeta);
      drawRate(xi, zeta);
      $("status").textContent = "";
    } catch (e) {
      $("status").textContent = String(e.message || e);
    }
  });
}

$("rho-map").addEventListener("click", (ev) => {
  const c = ev.currentTarget;
  const rect = c.getBoundingClientRect();
  const w = c.width - PAD.l - PAD.r;
  const h = c.height - PAD.t - PAD.b;
  const fx = (ev.clientX - rect.left - PAD.l) / w;
  const fy = 1 - (ev.clientY - rect.top - PAD.t) / h;
  if (fx < 0 || fx > 1 || fy < 0 || fy > 1) return;
  zetaInput.value = ZETA[0] + fx * (ZETA[1] - ZETA[0]);
  xiInput.value = XI[0] + fy * (XI[1] - XI[0]);
  update();
});

$("to-resonance").addEventListener("click", () => {
  const z = resonanceZeta(Number(xiInput.value));
  if (Number.isFinite(z)) {
    zetaInput.value = Math.min(z, ZETA[1]);
    update();
  }
});

xiInput.addEventListener("input", update);
zetaInput.addEventListener("input", update);

await init();
buildMap();
update();
