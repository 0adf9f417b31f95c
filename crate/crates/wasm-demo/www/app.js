import init, { country_json, simulate_json, pua_json, convert_json } from "./pkg/hdb_bench_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
const COLORS = { 1: "#1b7837", 2: "#2166ac", 3: "#b2182b" };

function call(f, ...args) {
  try {
    return [JSON.parse(f(...args)), null];
  } catch (e) {
    return [null, String(e)];
  }
}

function axes(ctx, w, h) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.moveTo(40, 10);
  ctx.lineTo(40, h - 25);
  ctx.lineTo(w - 10, h - 25);
  ctx.stroke();
}

function marker(ctx, x, h, color, label) {
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.moveTo(x, 10);
  ctx.lineTo(x, h - 25);
  ctx.stroke();
  ctx.fillText(label, x + 3, 20);
}

let country = null;

function renderCountry() {
  const [c, err] = call(country_json, num("seed"));
  country = c;
  if (err) {
    $("diets").innerHTML = `<p class="err">${err}</p>`;
    return;
  }
  const rows = c.diets.map((d) =>
    `<tr><td>${d.scenario}</td><td>${d.label}</td><td>${d.cost.toFixed(3)}</td>` +
    `<td>${d.emissions.toFixed(3)}</td><td>${d.items.map((i) => i.item_id).join(", ")}</td></tr>`);
  $("diets").innerHTML =
    `<p>${c.items.length} items. Costs in PPP$/day, emissions in kg CO2e/day.</p>` +
    `<table><tr><th>diet</th><th></th><th>cost</th><th>emissions</th><th>items</th></tr>${rows.join("")}</table>`;
}

function renderSimulation() {
  const canvas = $("hist");
  const ctx = canvas.getContext("2d");
  const [v, err] = call(simulate_json, num("seed"), num("scenario"), num("iterations"), num("simseed"), 40);
  axes(ctx, canvas.width, canvas.height);
  if (err) {
    $("simsummary").innerHTML = `<p class="err">${err}</p>`;
    return;
  }
  const h = v.cost.histogram;
  const diets = country ? country.diets : [];
  const lo = Math.min(h.min, ...diets.map((d) => d.cost));
  const hi = Math.max(h.min + h.width * h.counts.length, ...diets.map((d) => d.cost));
  const plotW = canvas.width - 60, plotH = canvas.height - 45;
  const sx = (x) => 40 + ((x - lo) / (hi - lo || 1)) * plotW;
  const top = Math.max(...h.counts);
  ctx.fillStyle = "#999";
  h.counts.forEach((c, i) => {
    const x0 = sx(h.min + i * h.width), x1 = sx(h.min + (i + 1) * h.width);
    const bh = (c / top) * plotH;
    ctx.fillRect(x0, canvas.height - 25 - bh, Math.max(1, x1 - x0 - 1), bh);
  });
  diets.forEach((d) => marker(ctx, sx(d.cost), canvas.height, COLORS[d.scenario], `diet ${d.scenario}`));
  ctx.fillStyle = "#222";
  ctx.fillText(lo.toFixed(2), 40, canvas.height - 10);
  ctx.fillText(hi.toFixed(2), canvas.width - 40, canvas.height - 10);
  const s = v.cost.summary;
  $("simsummary").textContent =
    `cost mean ${s.mean.toFixed(3)}, P2.5 ${s.p2_5.toFixed(3)}, P50 ${s.p50.toFixed(3)}, P97.5 ${s.p97_5.toFixed(3)} PPP$/day; ` +
    `emissions P50 ${v.emissions.summary.p50.toFixed(3)} kg CO2e/day`;
}

function renderPua() {
  const canvas = $("pua");
  const ctx = canvas.getContext("2d");
  const [v, err] = call(pua_json, num("seed"), num("median"), num("shape"), num("share"), num("line"));
  axes(ctx, canvas.width, canvas.height);
  if (err) {
    $("puamarkers").innerHTML = `<p class="err">${err}</p>`;
    return;
  }
  const maxCost = v.curve[v.curve.length - 1][0];
  const plotW = canvas.width - 60, plotH = canvas.height - 45;
  const sx = (x) => 40 + (x / maxCost) * plotW;
  const sy = (p) => canvas.height - 25 - p * plotH;
  ctx.strokeStyle = "#222";
  ctx.beginPath();
  v.curve.forEach(([c, p], i) => (i ? ctx.lineTo(sx(c), sy(p)) : ctx.moveTo(sx(c), sy(p))));
  ctx.stroke();
  v.markers.forEach((m) => marker(ctx, sx(m.cost), canvas.height, COLORS[m.scenario], `diet ${m.scenario}`));
  ctx.fillStyle = "#222";
  ctx.fillText("0", 40, canvas.height - 10);
  ctx.fillText(`${maxCost.toFixed(1)} PPP$/day`, canvas.width - 90, canvas.height - 10);
  ctx.fillText("100%", 5, 15);
  $("puamarkers").textContent = v.markers
    .map((m) => `diet ${m.scenario}: ${(100 * m.pua).toFixed(1)}% cannot afford`)
    .join("; ");
}

function renderConvert() {
  const [v, err] = call(convert_json, num("c_price"), num("c_weight"), num("c_edible"), num("c_kcal"), num("c_ef"), num("c_ppp"));
  $("convert").innerHTML = err
    ? `<p class="err">${err}</p>`
    : `<p>${v.price_ppp_per_1000_kcal.toFixed(4)} PPP$ and ${v.emissions_kg_per_1000_kcal.toFixed(4)} kg CO2e per 1,000 kcal</p>`;
}

function renderAll() {
  renderCountry();
  renderSimulation();
  renderPua();
}

await init();
$("seed").addEventListener("change", renderAll);
for (const id of ["scenario", "iterations", "simseed"]) $(id).addEventListener("change", renderSimulation);
for (const id of ["median", "shape", "share", "line"]) $(id).addEventListener("input", renderPua);
for (const id of ["c_price", "c_weight", "c_edible", "c_kcal", "c_ef", "c_ppp"]) $(id).addEventListener("input", renderConvert);
renderAll();
renderConvert();
