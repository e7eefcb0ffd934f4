// Display helpers. Values arrive from the API already converted to the
// requester's units and tagged; these functions only turn them into text.

import { t } from "./i18n.js";
import type { ApiRecord } from "./types.js";

export function fmtNumber(v: number, digits = 1): string {
  const rounded = Number(v.toFixed(digits));
  return String(rounded);
}

/** "2026-08-03T08:30:00Z" -> epoch milliseconds. */
export function epochMs(iso: string): number {
  return Date.parse(iso);
}

export function fmtDateTime(iso: string): string {
  const d = new Date(iso);
  const pad = (n: number) => String(n).padStart(2, "0");
  return `${d.getFullYear()}-${pad(d.getMonth() + 1)}-${pad(d.getDate())} ` +
    `${pad(d.getHours())}:${pad(d.getMinutes())}`;
}

export function fmtDate(iso: string): string {
  return iso.slice(0, 10);
}

/** datetime-local input value ("YYYY-MM-DDTHH:MM", local time) -> ISO UTC. */
export function isoFromLocalInput(value: string): string {
  const d = new Date(value);
  return d.toISOString().replace(/\.\d{3}Z$/, "Z");
}

/** ISO UTC -> datetime-local input value in local time. */
export function localInputFromIso(iso: string): string {
  const d = new Date(iso);
  const pad = (n: number) => String(n).padStart(2, "0");
  return `${d.getFullYear()}-${pad(d.getMonth() + 1)}-${pad(d.getDate())}` +
    `T${pad(d.getHours())}:${pad(d.getMinutes())}`;
}

export function nowLocalInput(): string {
  return localInputFromIso(new Date().toISOString());
}

/** ISO date of the Monday on or before the given date. */
export function mondayOf(d: Date): string {
  const copy = new Date(Date.UTC(d.getUTCFullYear(), d.getUTCMonth(), d.getUTCDate()));
  const dow = (copy.getUTCDay() + 6) % 7; // Monday = 0
  copy.setUTCDate(copy.getUTCDate() - dow);
  return copy.toISOString().slice(0, 10);
}

export function shiftIsoDate(isoDate: string, days: number): string {
  const d = new Date(isoDate + "T00:00:00Z");
  d.setUTCDate(d.getUTCDate() + days);
  return d.toISOString().slice(0, 10);
}

export function slotLabel(slot: { meal: string; relation: string } | null | undefined): string {
  if (!slot) return "";
  const meal = t(`meal.${slot.meal}` as "meal.breakfast");
  const rel = t(`relation.${slot.relation}` as "relation.before");
  return `${rel} ${meal.toLowerCase()}`;
}

/** One-line summary of a record for the diary list. */
export function recordSummary(r: ApiRecord): string {
  switch (r.type) {
    case "glucose":
      return `${fmtNumber(r.value ?? 0, 2)} ${r.unit} ${slotLabel(r.slot)}`.trim();
    case "insulin":
      return `${fmtNumber(r.units ?? 0, 1)} ${r.unit} ${r.insulin_kind ?? ""} ${slotLabel(r.slot)}`.trim();
    case "carbs":
      return `${fmtNumber(r.grams ?? 0, 0)} ${r.unit} ${slotLabel(r.slot)}`.trim();
    case "medication":
      return `${r.name ?? ""} ${r.dose ?? ""}`.trim();
    case "activity":
      return `${t(`intensity.${r.intensity ?? "low"}` as "intensity.low")}, ${r.duration_min} ${r.unit}`;
    case "weight":
      return `${fmtNumber(r.value ?? 0, 1)} ${r.unit}`;
    case "blood_pressure":
      return `${r.systolic}/${r.diastolic} ${r.unit}`;
  }
}

export function recordTimestamp(r: ApiRecord): string {
  return r.taken_at ?? r.measured_at ?? r.performed_at ?? "";
}
