// Turns the weekly-summary payload into the physician-style grid: one
// column per day, grouped rows per meal with glucose before/after, insulin,
// and carbs, plus an activity row.

import { fmtNumber } from "./format.js";
import { t, type MessageKey } from "./i18n.js";
import type { Meal, WeeklySummary } from "./types.js";

export const MEALS: Meal[] = ["breakfast", "lunch", "snack", "dinner"];

export interface GridRow {
  group: string; // meal label, repeated across its four metric rows
  metric: string;
  cells: string[]; // 7 formatted cells, Monday first
}

export interface GridModel {
  title: string;
  dayHeaders: string[]; // 7 ISO dates
  rows: GridRow[];
  activityRow: GridRow;
}

function cellText(v: number | null, digits: number, suffix = ""): string {
  if (v === null) return t("week.empty_cell");
  return fmtNumber(v, digits) + suffix;
}

export function weeklyGrid(summary: WeeklySummary): GridModel {
  const rows: GridRow[] = [];
  for (const meal of MEALS) {
    const mealLabel = t(`meal.${meal}` as MessageKey);
    const metrics: [string, (c: { glucose_before: number | null; glucose_after: number | null; insulin_units: number | null; carbs_g: number | null }) => string][] = [
      [t("week.glucose_before"), (c) => cellText(c.glucose_before, 1)],
      [t("week.glucose_after"), (c) => cellText(c.glucose_after, 1)],
      [t("week.insulin"), (c) => cellText(c.insulin_units, 1)],
      [t("week.carbs"), (c) => cellText(c.carbs_g, 0)],
    ];
    for (const [metric, pick] of metrics) {
      rows.push({
        group: mealLabel,
        metric,
        cells: summary.days.map((d) => pick(d.meals[meal])),
      });
    }
  }

  const activityRow: GridRow = {
    group: t("week.activity"),
    metric: t("week.activity"),
    cells: summary.days.map((d) =>
      d.activities.length === 0
        ? t("week.empty_cell")
        : d.activities
          .map((a) => `${t(`intensity.${a.intensity}` as MessageKey)} ${a.duration_min}min`)
          .join(", ")),
  };

  return {
    title: t("week.title", { date: summary.week_start }),
    dayHeaders: summary.days.map((d) => d.day),
    rows,
    activityRow,
  };
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** The grid as a plain HTML table; glucose cells carry the active unit in
 *  the header so the table is self-describing. */
export function renderWeeklyTable(summary: WeeklySummary): string {
  const grid = weeklyGrid(summary);
  const out: string[] = [];
  out.push('<table class="weekly">');
  out.push("<thead><tr><th></th><th></th>");
  for (const day of grid.dayHeaders) out.push(`<th>${esc(day.slice(5))}</th>`);
  out.push("</tr></thead><tbody>");
  let lastGroup = "";
  for (const row of grid.rows) {
    out.push("<tr>");
    if (row.group !== lastGroup) {
      out.push(`<th class="meal" rowspan="4">${esc(row.group)}</th>`);
      lastGroup = row.group;
    }
    out.push(`<th class="metric">${esc(row.metric)}</th>`);
    for (const cell of row.cells) out.push(`<td>${esc(cell)}</td>`);
    out.push("</tr>");
  }
  out.push(`<tr><th class="meal">${esc(grid.activityRow.group)}</th><th></th>`);
  for (const cell of grid.activityRow.cells) out.push(`<td>${esc(cell)}</td>`);
  out.push("</tr></tbody></table>");
  return out.join("");
}
