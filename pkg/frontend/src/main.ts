// Page wiring: DOM events mutate the view state, every state change
// that needs geometry asks the server, responses drive the renderers.

import { ApiClient, ApiError } from "./api.js";
import { renderRealization } from "./canvas.js";
import {
  axisSelectorEnabled,
  renderCurvePanel,
} from "./curvePanel.js";
import { renderIntervalBar } from "./intervalBar.js";
import { MotionPlayer } from "./motionPlayer.js";
import { ViewState } from "./state.js";
import type { CurvePayload, Frame, LinkageDocument } from "./types.js";

const ANIMATE_SAMPLES = 24;

const api = new ApiClient("");
const state = new ViewState();
let curve: CurvePayload | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const fileInput = el<HTMLInputElement>("doc-file");
const algoSelect = el<HTMLSelectElement>("algo");
const statusLine = el<HTMLElement>("status");
const barSvg = el<HTMLElement>("interval-bar") as unknown as SVGSVGElement;
const canvasSvg = el<HTMLElement>("canvas") as unknown as SVGSVGElement;
const curveSvg = el<HTMLElement>("curve") as unknown as SVGSVGElement;
const lfSlider = el<HTMLInputElement>("lf-slider");
const lfReadout = el<HTMLElement>("lf-readout");
const markStartBtn = el<HTMLButtonElement>("mark-start");
const markTargetBtn = el<HTMLButtonElement>("mark-target");
const findBtn = el<HTMLButtonElement>("find-paths");
const pathSelect = el<HTMLSelectElement>("path-select");
const playBtn = el<HTMLButtonElement>("play");
const scrub = el<HTMLInputElement>("scrub");
const caseLabel = el<HTMLElement>("case-label");
const axisX = el<HTMLSelectElement>("axis-x");
const axisY = el<HTMLSelectElement>("axis-y");

function setStatus(text: string): void {
  statusLine.textContent = text;
}

function drawFrame(frame: Frame): void {
  if (!state.document || !state.check) return;
  renderRealization(canvasSvg, state.document, state.check, frame, state.realizationError);
  if (curve) {
    renderCurvePanel(curveSvg, curve, state.curveAxes, {
      sigma: frame.forwardType,
      lf: frame.baseLength,
    });
  }
}

const player = new MotionPlayer(state, (frame) => {
  scrub.value = String(state.playhead);
  drawFrame(frame);
});

function syncSlider(): void {
  if (!state.space || !state.current) return;
  const spans = state.space.union;
  lfSlider.min = String(spans[0][0]);
  lfSlider.max = String(spans[spans.length - 1][1]);
  lfSlider.step = "any";
  lfSlider.value = String(state.current.lf);
  lfReadout.textContent = `${state.current.lf.toFixed(6)} : ${state.current.sigma}`;
}

function refreshRealization(): void {
  if (!state.documentHash || !state.current) return;
  const token = state.beginRealize();
  api
    .realize(state.documentHash, state.current.lf, state.current.sigma)
    .then((frame) => {
      if (state.applyRealization(token, frame)) drawFrame(frame);
    })
    .catch((err: unknown) => {
      const message = err instanceof ApiError ? err.message : String(err);
      if (state.applyRealizationError(token, message) && state.lastGoodFrame) {
        drawFrame(state.lastGoodFrame);
      }
      setStatus(message);
    });
}

function refreshBar(): void {
  renderIntervalBar(barSvg, state, {
    onDrag(lf, sigma) {
      state.current = state.snap(lf, sigma);
      syncSlider();
      refreshRealization();
      refreshBar();
    },
    onFlip(end) {
      const flip = state.flipAtEndpoint(end);
      if (flip) {
        setStatus(`flipped into ${flip.target.sigma}`);
        syncSlider();
        refreshRealization();
        refreshBar();
      }
    },
  });
}

function populateAxisSelectors(): void {
  if (!curve) return;
  const options = curve.nonEdges
    .map((pair, i) => `<option value="${i}">d(${pair[0]},${pair[1]})</option>`)
    .join("");
  axisX.innerHTML = options;
  axisY.innerHTML = options;
  const enabled = axisSelectorEnabled(curve);
  axisX.disabled = !enabled;
  axisY.disabled = !enabled;
  state.curveAxes = [0, curve.nonEdges.length > 1 ? 1 : 0];
  axisX.value = String(state.curveAxes[0]);
  axisY.value = String(state.curveAxes[1]);
}

async function loadDocument(doc: LinkageDocument): Promise<void> {
  const uploaded = await api.upload(doc);
  state.setDocument(doc, uploaded.hash, uploaded.check);
  if (!uploaded.check.treeDecomposable) {
    setStatus("document is not tree-decomposable over its base non-edge");
    return;
  }
  const report = await api.space(uploaded.hash, algoSelect.value as "elr" | "qim");
  state.setSpace(report);
  curve = await api.curve(uploaded.hash).catch(() => null);
  populateAxisSelectors();
  syncSlider();
  refreshBar();
  refreshRealization();
  setStatus(`loaded ${uploaded.hash}: ${report.union.length} union interval(s)`);
}

fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  file
    .text()
    .then((text) => loadDocument(JSON.parse(text) as LinkageDocument))
    .catch((err: unknown) => setStatus(String(err)));
});

algoSelect.addEventListener("change", () => {
  if (!state.documentHash) return;
  api
    .space(state.documentHash, algoSelect.value as "elr" | "qim")
    .then((report) => {
      state.setSpace(report);
      syncSlider();
      refreshBar();
    })
    .catch((err: unknown) => setStatus(String(err)));
});

lfSlider.addEventListener("input", () => {
  state.setLf(Number(lfSlider.value));
  syncSlider();
  refreshRealization();
  refreshBar();
});

markStartBtn.addEventListener("click", () => {
  state.markStart();
  setStatus(`start = ${state.startConfig?.lf.toFixed(6)} : ${state.startConfig?.sigma}`);
});

markTargetBtn.addEventListener("click", () => {
  state.markTarget();
  setStatus(`target = ${state.targetConfig?.lf.toFixed(6)} : ${state.targetConfig?.sigma}`);
});

findBtn.addEventListener("click", () => {
  if (!state.documentHash || !state.startConfig || !state.targetConfig) {
    setStatus("mark a start and a target first");
    return;
  }
  api
    .motion(
      state.documentHash,
      { lf: state.startConfig.lf, sigma: state.startConfig.sigma },
      { lf: state.targetConfig.lf, sigma: state.targetConfig.sigma },
      ANIMATE_SAMPLES,
    )
    .then((response) => {
      state.setMotion(response);
      pathSelect.innerHTML = response.paths
        .map((p, i) => `<option value="${i}">path ${i + 1} (${p.case})</option>`)
        .join("");
      pathSelect.disabled = response.paths.length < 2;
      scrub.max = String(Math.max((state.frames?.length ?? 1) - 1, 0));
      scrub.value = "0";
      caseLabel.textContent = player.caseLabel;
      setStatus(
        response.paths.length === 0
          ? "no path between the chosen configurations"
          : `${response.paths.length} path(s), ${state.frames?.length ?? 0} frames`,
      );
    })
    .catch((err: unknown) => setStatus(String(err)));
});

pathSelect.addEventListener("change", () => {
  state.selectPath(Number(pathSelect.value));
  caseLabel.textContent = player.caseLabel;
});

playBtn.addEventListener("click", () => {
  if (player.status === "playing") {
    player.pause();
    playBtn.textContent = "play";
  } else {
    try {
      player.play();
      playBtn.textContent = "pause";
    } catch (err) {
      setStatus(String(err));
    }
  }
});

scrub.addEventListener("input", () => {
  player.pause();
  playBtn.textContent = "play";
  player.scrub(Number(scrub.value));
});

for (const select of [axisX, axisY]) {
  select.addEventListener("change", () => {
    state.curveAxes = [Number(axisX.value), Number(axisY.value)];
    if (curve && state.lastGoodFrame) drawFrame(state.lastGoodFrame);
  });
}

setStatus("upload a linkage document to begin");
