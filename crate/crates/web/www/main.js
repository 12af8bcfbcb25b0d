import init, { analyze, homotopy, example } from "./pkg/hyperconn_web.js";

const $ = (id) => document.getElementById(id);

function show(text, isError) {
  $("out").textContent = text;
  $("out").className = isError ? "error" : "";
}

function draw(vertices, edges) {
  const canvas = $("view");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const cx = canvas.width / 2, cy = canvas.height / 2;
  const r = Math.min(cx, cy) - 40;
  const pos = new Map();
  vertices.forEach((v, i) => {
    const a = (2 * Math.PI * i) / vertices.length - Math.PI / 2;
    pos.set(v, [cx + r * Math.cos(a), cy + r * Math.sin(a)]);
  });

  edges.forEach((edge, i) => {
    const hue = (i * 137) % 360;
    const pts = edge.map((v) => pos.get(v));
    ctx.strokeStyle = `hsl(${hue} 60% 40%)`;
    ctx.lineWidth = 2;
    ctx.beginPath();
    if (pts.length === 2) {
      ctx.moveTo(...pts[0]);
      ctx.lineTo(...pts[1]);
      ctx.stroke();
      return;
    }
    // order around the centroid so the polygon does not cross itself
    const mx = pts.reduce((s, p) => s + p[0], 0) / pts.length;
    const my = pts.reduce((s, p) => s + p[1], 0) / pts.length;
    pts.sort((p, q) => Math.atan2(p[1] - my, p[0] - mx) - Math.atan2(q[1] - my, q[0] - mx));
    ctx.moveTo(...pts[0]);
    pts.slice(1).forEach((p) => ctx.lineTo(...p));
    ctx.closePath();
    ctx.fillStyle = `hsl(${hue} 60% 50% / 0.15)`;
    ctx.fill();
    ctx.stroke();
  });

  ctx.font = "13px system-ui";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  for (const [v, [x, y]] of pos) {
    ctx.fillStyle = "#fff";
    ctx.strokeStyle = "#222";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.arc(x, y, 13, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#222";
    ctx.fillText(v, x, y);
  }
}

function runAnalyze() {
  try {
    const doc = JSON.parse(analyze($("input").value));
    draw(doc.vertices, doc.edges);
    $("rows").innerHTML = "";
    for (const [name, value] of doc.rows) {
      const tr = $("rows").insertRow();
      tr.insertCell().textContent = name;
      tr.insertCell().textContent = value;
    }
    show("", false);
  } catch (e) {
    show(String(e), true);
  }
}

function runHomotopy() {
  try {
    show(homotopy($("input").value), false);
  } catch (e) {
    show(String(e), true);
  }
}

await init();
$("analyze").onclick = runAnalyze;
$("homotopy").onclick = runHomotopy;
$("example").onchange = (ev) => {
  if (!ev.target.value) return;
  try {
    $("input").value = example(ev.target.value);
    runAnalyze();
  } catch (e) {
    show(String(e), true);
  }
};
runAnalyze();
