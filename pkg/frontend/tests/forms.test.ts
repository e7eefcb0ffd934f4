import { describe, expect, it } from "vitest";

import { buildPayload, fieldsFor, slotOptions, SLOTTED, TIMESTAMP_FIELD } from "../src/forms.js";
import type { UnitPrefs } from "../src/types.js";

const UNITS: UnitPrefs = { glucose: "mg/dL", weight: "kg" };

// All records share a timestamp; forms collect it as a datetime-local value.
const WHEN = "2026-08-03T08:30";

describe("fieldsFor", () => {
  it("labels value fields with the requester's units", () => {
    const glucose = fieldsFor("glucose", UNITS);
    expect(glucose[0]?.unit).toBe("mg/dL");
    const mmol = fieldsFor("glucose", { glucose: "mmol/L", weight: "lbs" });
    expect(mmol[0]?.unit).toBe("mmol/L");
    expect(fieldsFor("weight", { glucose: "mmol/L", weight: "lbs" })[0]?.unit).toBe("lbs");
  });

  it("covers all seven record types with a timestamp field each", () => {
    for (const type of Object.keys(TIMESTAMP_FIELD) as (keyof typeof TIMESTAMP_FIELD)[]) {
      expect(fieldsFor(type, UNITS).length).toBeGreaterThan(0);
    }
    expect(TIMESTAMP_FIELD.glucose).toBe("taken_at");
    expect(TIMESTAMP_FIELD.weight).toBe("measured_at");
    expect(TIMESTAMP_FIELD.activity).toBe("performed_at");
  });
});

describe("buildPayload", () => {
  it("assembles a glucose payload with slot and note", () => {
    const { payload, errors } = buildPayload("glucose", UNITS, {
      value: "104.5",
      when: WHEN,
      slot: "breakfast/before",
      note: "fasting",
    });
    expect(errors).toEqual({});
    expect(payload?.["value"]).toBe(104.5);
    expect(payload?.["slot"]).toEqual({ meal: "breakfast", relation: "before" });
    expect(payload?.["note"]).toBe("fasting");
    // datetime-local is interpreted in the runtime's local zone, then sent as UTC
    expect(payload?.["taken_at"]).toBe(new Date(WHEN).toISOString().replace(/\.\d{3}Z$/, "Z"));
  });

  it("sends an explicit null slot when none is chosen", () => {
    for (const type of SLOTTED) {
      const values: Record<string, string> = { when: WHEN, slot: "" };
      if (type === "glucose") values["value"] = "100";
      if (type === "insulin") Object.assign(values, { units: "4", insulin_kind: "rapid" });
      if (type === "carbs") values["grams"] = "45";
      const { payload, errors } = buildPayload(type, UNITS, values);
      expect(errors).toEqual({});
      expect(payload).toHaveProperty("slot", null);
    }
    // non-slotted types never gain the key
    const { payload } = buildPayload("weight", UNITS, { value: "70", when: WHEN });
    expect(payload).not.toHaveProperty("slot");
  });

  it("rejects missing required fields", () => {
    const { payload, errors } = buildPayload("glucose", UNITS, { when: WHEN });
    expect(payload).toBeUndefined();
    expect(errors["value"]).toBeTruthy();
  });

  it("rejects non-numeric, non-positive, and fractional-int values", () => {
    expect(buildPayload("glucose", UNITS, { value: "abc", when: WHEN }).errors["value"]).toBeTruthy();
    expect(buildPayload("glucose", UNITS, { value: "0", when: WHEN }).errors["value"]).toBeTruthy();
    expect(buildPayload("glucose", UNITS, { value: "-5", when: WHEN }).errors["value"]).toBeTruthy();
    const frac = buildPayload("activity", UNITS, {
      intensity: "low", duration_min: "30.5", when: WHEN,
    });
    expect(frac.errors["duration_min"]).toBeTruthy();
    const tooLong = buildPayload("activity", UNITS, {
      intensity: "low", duration_min: "2000", when: WHEN,
    });
    expect(tooLong.errors["duration_min"]).toBeTruthy();
  });

  it("requires systolic above diastolic", () => {
    const bad = buildPayload("blood_pressure", UNITS, {
      systolic: "80", diastolic: "120", when: WHEN,
    });
    expect(bad.payload).toBeUndefined();
    expect(bad.errors["systolic"]).toBeTruthy();

    const good = buildPayload("blood_pressure", UNITS, {
      systolic: "120", diastolic: "80", when: WHEN,
    });
    expect(good.errors).toEqual({});
    expect(good.payload?.["systolic"]).toBe(120);
    expect(good.payload?.["diastolic"]).toBe(80);
  });

  it("requires the timestamp", () => {
    const { errors } = buildPayload("carbs", UNITS, { grams: "30" });
    expect(errors["when"]).toBeTruthy();
  });

  it("omits the note key when the field is blank", () => {
    const { payload } = buildPayload("weight", UNITS, { value: "70", when: WHEN, note: "  " });
    expect(payload).not.toHaveProperty("note");
  });
});

describe("slotOptions", () => {
  it("lists the no-slot choice first, then all eight meal pairs", () => {
    const opts = slotOptions();
    expect(opts[0]?.value).toBe("");
    expect(opts).toHaveLength(9);
    expect(opts.map((o) => o.value)).toContain("dinner/after");
    expect(opts[1]?.label).toBe("Breakfast (before)");
  });
});
