// Shapes of the service's JSON payloads. These mirror the JSON Schemas
// shipped with the backend; field names and enums must stay in sync.

export type Role = "patient" | "supervisor";
export type LanguageCode = "en" | "es";
export type GlucoseUnit = "mg/dL" | "mmol/L";
export type WeightUnit = "kg" | "lbs";

export type RecordType =
  | "glucose"
  | "insulin"
  | "carbs"
  | "medication"
  | "activity"
  | "weight"
  | "blood_pressure";

export const RECORD_TYPES: RecordType[] = [
  "glucose", "insulin", "carbs", "medication", "activity", "weight", "blood_pressure",
];

export type Meal = "breakfast" | "lunch" | "snack" | "dinner";
export type MealRelation = "before" | "after";

export interface MealSlot {
  meal: Meal;
  relation: MealRelation;
}

export interface Targets {
  glucose_low: number;
  glucose_high: number;
  bp_sys_high: number;
  bp_dia_high: number;
}

export interface UnitPrefs {
  glucose: GlucoseUnit;
  weight: WeightUnit;
}

export interface Profile {
  id: string;
  role: Role;
  display_name: string;
  email: string;
  language: LanguageCode;
  units: UnitPrefs;
  height_m: number | null;
  targets: Targets | null;
}

export interface PublicUser {
  id: string;
  display_name: string;
  email: string;
}

export interface LoginResponse {
  token: string;
  expires_at: string;
  user_id: string;
}

// One stored measurement as the API serializes it. The value fields differ
// per type; unknown keys are preserved so forms can round-trip them.
export interface ApiRecord {
  id: string;
  type: RecordType;
  patient: string;
  note: string | null;
  value?: number;
  unit?: string;
  taken_at?: string;
  measured_at?: string;
  performed_at?: string;
  slot?: MealSlot | null;
  units?: number;
  insulin_kind?: string;
  grams?: number;
  name?: string;
  dose?: string;
  intensity?: "low" | "moderate" | "high";
  duration_min?: number;
  systolic?: number;
  diastolic?: number;
}

export interface RecordList {
  items: ApiRecord[];
  count: number;
}

export interface SeriesStats {
  count: number;
  mean: number | null;
  min: number | null;
  max: number | null;
  pct_below?: number | null;
  pct_in_range?: number | null;
  pct_above?: number | null;
}

export interface GlucosePoint {
  t: string;
  value: number;
  level: "below" | "in_range" | "above";
}

export interface GlucoseSeries {
  unit: GlucoseUnit;
  targets: { low: number; high: number };
  points: GlucosePoint[];
  stats: SeriesStats;
}

export interface WeightPoint {
  t: string;
  weight: number;
  bmi: number | null;
}

export interface WeightSeries {
  unit: WeightUnit;
  points: WeightPoint[];
  stats: SeriesStats;
}

export interface BpPoint {
  t: string;
  systolic: number;
  diastolic: number;
  level: "in_range" | "elevated";
}

export interface BpSeries {
  unit: string;
  targets: { sys_high: number; dia_high: number };
  points: BpPoint[];
  stats: { systolic: SeriesStats; diastolic: SeriesStats };
}

export interface WeeklyMealCell {
  glucose_before: number | null;
  glucose_after: number | null;
  insulin_units: number | null;
  carbs_g: number | null;
}

export interface WeeklyDay {
  day: string;
  meals: Record<Meal, WeeklyMealCell>;
  activities: { intensity: string; duration_min: number }[];
}

export interface WeeklySummary {
  week_start: string;
  glucose_unit: GlucoseUnit;
  tz_offset_min: number;
  days: WeeklyDay[];
}

export interface ContentDoc {
  name: string;
  language: LanguageCode;
  version: number;
  format: string;
  body: string;
}

export interface UserList {
  items: PublicUser[];
}

export interface LinkOut {
  patient: string;
  supervisor: string;
  created_at: string;
  status: "active" | "revoked";
}

export interface ApiErrorBody {
  error: {
    status: number;
    code: string;
    message: string;
    details?: unknown;
  };
}
