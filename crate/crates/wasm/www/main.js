import init, { letterplace_demo, lambda_bar_demo, det_demo } from "./pkg/letterplace_wasm.js";

const $ = (id) => document.getElementById(id);

function show(target, json) {
  const out = JSON.parse(json);
  const el = $(target);
  el.classList.toggle("error", "error" in out);
  if ("error" in out) {
    el.textContent = `${out.reason}: ${out.error}`;
    return null;
  }
  return out;
}

function letterplace() {
  const out = show("out-letterplace", letterplace_demo($("ideal").value));
  if (!out) return;
  $("out-letterplace").textContent = [
    "L(J,P)   " + out.letterplace.join(", "),
    "L(P,J)   " + out.coletterplace.join(", "),
    `Alexander dual over ${out.support_size} variables: ${out.dual_holds}`,
    "p1 image " + out.projection.join(", "),
    `regular quotient: ${out.projection_regular}`,
  ].join("\n");
}

function lambda() {
  const out = show("out-lambda", lambda_bar_demo($("poset").value, $("values").value));
  if (!out) return;
  const chains = out.chains.map((c) => `${c.element}:${c.length}`).join("  ");
  $("out-lambda").textContent = [
    "monomial      " + out.monomial,
    "inverse       " + out.inverse.join(", ") + (out.round_trip ? "  (round trip ok)" : ""),
    "longest chain " + chains,
  ].join("\n");
}

function det() {
  $("out-det").textContent = "working...";
  // let the message paint before the Groebner basis starts
  setTimeout(() => {
    const out = show("out-det", det_demo($("lseq").value, Number($("start").value)));
    if (!out) return;
    $("out-det").textContent = [
      out.matrix,
      "",
      "terrace     " + out.terrace.join(", "),
      "i-sequence  " + out.i_sequence.join(", "),
      "L^Y(i)      " + out.ly_ideal.join(", "),
      "in(I)       " + out.initial_ideal.join(", "),
      `Groebner basis of ${out.gb_size} elements, codimension ${out.codimension}, ok: ${out.ok}`,
    ].join("\n");
  }, 10);
}

await init();
$("run-letterplace").addEventListener("click", letterplace);
$("run-lambda").addEventListener("click", lambda);
$("run-det").addEventListener("click", det);
letterplace();
lambda();
