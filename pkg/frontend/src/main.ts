import { ApiClient } from "./api.js";
import { SessionController } from "./controller.js";
import { buildRequest, FormValues } from "./form.js";
import { drawStage } from "./plot.js";
import { renderInfo, renderWords } from "./render.js";
import { STAGE_TITLES } from "./stageinfo.js";
import type { PresetEntry, StageView } from "./types.js";
import { ViewControl, applyControl, initialCounts, viewportFrom } from "./viewport.js";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  if (override) return override;
  if (window.location.protocol.startsWith("http")) return window.location.origin;
  return "http://127.0.0.1:8000";
}

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const COEFF_IDS = [1, 2, 3, 4, 5, 6].flatMap((i) => [`a${i}`, `b${i}`]);
const CUSTOM_IDS = [...COEFF_IDS, "f1-mantissa", "f1-exp", "dc", "periods"];

function readForm(): FormValues {
  const val = (id: string) => ($(id) as HTMLInputElement).value;
  return {
    preset: ($("preset") as unknown as HTMLSelectElement).value,
    a: [1, 2, 3, 4, 5, 6].map((i) => val(`a${i}`)),
    b: [1, 2, 3, 4, 5, 6].map((i) => val(`b${i}`)),
    f1Mantissa: val("f1-mantissa"),
    f1Exponent: val("f1-exp"),
    dc: val("dc"),
    periods: val("periods"),
    samples: val("samples"),
    bits: val("bits"),
  };
}

function clearFieldErrors(): void {
  document.querySelectorAll<HTMLElement>("[data-error-for]").forEach((el) => (el.textContent = ""));
}

function showFieldErrors(errors: { field: string; message: string }[]): void {
  clearFieldErrors();
  for (const err of errors) {
    const slot = document.querySelector<HTMLElement>(`[data-error-for="${err.field}"]`);
    if (slot) slot.textContent = err.message;
  }
}

function fillFromPreset(entry: PresetEntry): void {
  const set = (id: string, value: number) => (($(id) as HTMLInputElement).value = String(value));
  entry.spec.a.forEach((v, i) => set(`a${i + 1}`, v));
  entry.spec.b.forEach((v, i) => set(`b${i + 1}`, v));
  set("f1-mantissa", entry.spec.f1_mantissa);
  set("f1-exp", entry.spec.f1_exponent);
  set("dc", entry.spec.dc);
  set("periods", entry.spec.periods);
}

function main(): void {
  const api = new ApiClient(apiBase());
  let counts = initialCounts();
  let currentView: StageView | null = null;
  const canvas = $("plot") as unknown as HTMLCanvasElement;

  const redraw = () => {
    if (currentView) drawStage(canvas, currentView, viewportFrom(counts));
  };

  const controller = new SessionController(api, {
    renderStage(stage, view) {
      currentView = view;
      $("stage-title").textContent = `${stage}. ${STAGE_TITLES[stage] ?? "?"}`;
      renderInfo($("info"), view);
      renderWords($("words"), view);
      redraw();
    },
    showError(message) {
      const banner = $("banner");
      banner.textContent = message ?? "";
      banner.hidden = message === null;
    },
    setBusy(busy) {
      document
        .querySelectorAll<HTMLButtonElement>("button[data-api]")
        .forEach((b) => (b.disabled = busy));
    },
  });

  api
    .listPresets()
    .then((presets) => {
      const select = $("preset") as unknown as HTMLSelectElement;
      for (const entry of presets) {
        const option = document.createElement("option");
        option.value = entry.name;
        option.textContent = entry.name;
        select.append(option);
      }
      const syncPresetFields = () => {
        const chosen = presets.find((p) => p.name === select.value);
        CUSTOM_IDS.forEach((id) => (($(id) as HTMLInputElement).disabled = chosen !== undefined));
        if (chosen) fillFromPreset(chosen);
      };
      select.addEventListener("change", syncPresetFields);
      select.value = "sinusoid";
      syncPresetFields();
    })
    .catch((err) => {
      $("banner").hidden = false;
      $("banner").textContent = `cannot reach the API at ${api.baseUrl}: ${err}`;
    });

  $("ok").addEventListener("click", () => {
    const result = buildRequest(readForm());
    if (!result.ok) {
      showFieldErrors(result.errors);
      return; // invalid input never leaves the browser
    }
    clearFieldErrors();
    void controller.create(result.request);
  });
  $("forward").addEventListener("click", () => void controller.step("forward"));
  $("back").addEventListener("click", () => void controller.step("back"));
  $("rst").addEventListener("click", () => void controller.reset());

  const viewButtons: [string, ViewControl][] = [
    ["pan-up", "pan-up"],
    ["pan-down", "pan-down"],
    ["pan-left", "pan-left"],
    ["pan-right", "pan-right"],
    ["zoom-x-in", "zoom-x-in"],
    ["zoom-x-out", "zoom-x-out"],
    ["zoom-y-in", "zoom-y-in"],
    ["zoom-y-out", "zoom-y-out"],
  ];
  for (const [id, control] of viewButtons) {
    $(id).addEventListener("click", () => {
      counts = applyControl(counts, control);
      redraw(); // view transform only; session data is never re-fetched
    });
  }

  $("help-btn").addEventListener("click", () => {
    $("help-panel").hidden = !$("help-panel").hidden;
  });
  $("authors-btn").addEventListener("click", () => {
    $("authors-panel").hidden = !$("authors-panel").hidden;
  });
}

main();
