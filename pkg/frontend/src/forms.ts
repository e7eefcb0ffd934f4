// Declarative entry forms: which fields each record type needs, how to
// validate them before submit, and how to assemble the request payload.
// Server-side validation remains authoritative; this mirror just catches
// the obvious mistakes without a round trip.

import { isoFromLocalInput } from "./format.js";
import { t, type MessageKey } from "./i18n.js";
import type { RecordType, UnitPrefs } from "./types.js";

export interface SelectOption {
  value: string;
  labelKey: MessageKey;
}

export interface FieldSpec {
  name: string;
  labelKey: MessageKey;
  kind: "number" | "int" | "text" | "select";
  required: boolean;
  unit?: string;
  positive?: boolean; // strictly greater than zero
  min?: number; // inclusive
  max?: number; // inclusive
  options?: SelectOption[];
}

export const TIMESTAMP_FIELD: Record<RecordType, string> = {
  glucose: "taken_at",
  insulin: "taken_at",
  carbs: "taken_at",
  medication: "taken_at",
  activity: "performed_at",
  weight: "measured_at",
  blood_pressure: "measured_at",
};

/** Types whose entries carry a before/after meal slot. */
export const SLOTTED: readonly RecordType[] = ["glucose", "insulin", "carbs"];

export function fieldsFor(type: RecordType, units: UnitPrefs): FieldSpec[] {
  switch (type) {
    case "glucose":
      return [
        { name: "value", labelKey: "field.value", kind: "number", required: true, unit: units.glucose, positive: true },
      ];
    case "insulin":
      return [
        { name: "units", labelKey: "field.units", kind: "number", required: true, positive: true },
        { name: "insulin_kind", labelKey: "field.insulin_kind", kind: "text", required: true },
      ];
    case "carbs":
      return [
        { name: "grams", labelKey: "field.grams", kind: "number", required: true, positive: true },
      ];
    case "medication":
      return [
        { name: "name", labelKey: "field.name", kind: "text", required: true },
        { name: "dose", labelKey: "field.dose", kind: "text", required: true },
      ];
    case "activity":
      return [
        {
          name: "intensity", labelKey: "field.intensity", kind: "select", required: true,
          options: [
            { value: "low", labelKey: "intensity.low" },
            { value: "moderate", labelKey: "intensity.moderate" },
            { value: "high", labelKey: "intensity.high" },
          ],
        },
        { name: "duration_min", labelKey: "field.duration", kind: "int", required: true, min: 1, max: 1440 },
      ];
    case "weight":
      return [
        { name: "value", labelKey: "field.value", kind: "number", required: true, unit: units.weight, positive: true },
      ];
    case "blood_pressure":
      return [
        { name: "systolic", labelKey: "field.systolic", kind: "int", required: true, unit: "mmHg", min: 1 },
        { name: "diastolic", labelKey: "field.diastolic", kind: "int", required: true, unit: "mmHg", min: 1 },
      ];
  }
}

export interface FormResult {
  payload?: Record<string, unknown>;
  errors: Record<string, string>;
}

/**
 * Validates raw form values and builds the request body. `values` holds the
 * typed field inputs plus "when" (datetime-local), optional "note", and for
 * slotted types an optional "slot" of the form "breakfast/before" or "".
 */
export function buildPayload(
  type: RecordType,
  units: UnitPrefs,
  values: Record<string, string>,
): FormResult {
  const errors: Record<string, string> = {};
  const payload: Record<string, unknown> = {};

  for (const field of fieldsFor(type, units)) {
    const raw = (values[field.name] ?? "").trim();
    if (raw === "") {
      if (field.required) errors[field.name] = t("error.required");
      continue;
    }
    if (field.kind === "number" || field.kind === "int") {
      const num = Number(raw);
      const badInt = field.kind === "int" && !Number.isInteger(num);
      if (!Number.isFinite(num) || badInt) {
        errors[field.name] = t("error.number");
        continue;
      }
      if ((field.positive && num <= 0) ||
          (field.min !== undefined && num < field.min) ||
          (field.max !== undefined && num > field.max)) {
        errors[field.name] = t("error.number");
        continue;
      }
      payload[field.name] = num;
    } else {
      payload[field.name] = raw;
    }
  }

  if (type === "blood_pressure" &&
      typeof payload["systolic"] === "number" &&
      typeof payload["diastolic"] === "number" &&
      payload["systolic"] <= payload["diastolic"]) {
    errors["systolic"] = t("error.number");
  }

  const when = (values["when"] ?? "").trim();
  if (when === "") {
    errors["when"] = t("error.required");
  } else {
    payload[TIMESTAMP_FIELD[type]] = isoFromLocalInput(when);
  }

  const note = (values["note"] ?? "").trim();
  if (note !== "") payload["note"] = note;

  if (SLOTTED.includes(type)) {
    const slot = values["slot"] ?? "";
    if (slot !== "") {
      const [meal, relation] = slot.split("/");
      payload["slot"] = { meal, relation };
    } else {
      payload["slot"] = null;
    }
  }

  if (Object.keys(errors).length > 0) return { errors };
  return { payload, errors };
}

/** Every meal/relation pair for the slot dropdown, in diary order. */
export function slotOptions(): { value: string; label: string }[] {
  const out: { value: string; label: string }[] = [{ value: "", label: t("field.slot.none") }];
  for (const meal of ["breakfast", "lunch", "snack", "dinner"] as const) {
    for (const relation of ["before", "after"] as const) {
      out.push({
        value: `${meal}/${relation}`,
        label: `${t(`meal.${meal}`)} (${t(`relation.${relation}`)})`,
      });
    }
  }
  return out;
}
