// The whole single-page client: hash router, screens, and DOM plumbing.
// Everything renders through createApp() so tests can mount the app against
// jsdom and a fake or real API without touching module-level state.

import { ApiError } from "./api.js";
import { lineChart } from "./charts.js";
import {
  epochMs,
  fmtDateTime,
  fmtNumber,
  mondayOf,
  nowLocalInput,
  recordSummary,
  recordTimestamp,
  shiftIsoDate,
} from "./format.js";
import { buildPayload, fieldsFor, SLOTTED, slotOptions } from "./forms.js";
import { currentLanguage, onLanguageChange, setLanguage, t, type MessageKey } from "./i18n.js";
import { ClientSession, WriteGuardError } from "./session.js";
import { RECORD_TYPES, type LanguageCode, type RecordType, type SeriesStats } from "./types.js";
import { renderWeeklyTable } from "./weekly.js";

type Attrs = Record<string, string | EventListener>;
type Child = Node | string;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value);
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

function escapeHtml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Just enough markdown for the FAQ/terms documents: headings, lists,
 *  paragraphs, and inline emphasis. */
export function mdToHtml(md: string): string {
  const out: string[] = [];
  let listOpen = false;
  const closeList = () => {
    if (listOpen) {
      out.push("</ul>");
      listOpen = false;
    }
  };
  for (const block of md.split(/\n\s*\n/)) {
    const lines = block.split("\n").map((l) => l.trim()).filter((l) => l !== "");
    for (const line of lines) {
      if (line.startsWith("<!--")) continue;
      const heading = /^(#{1,4})\s+(.*)$/.exec(line);
      if (heading) {
        closeList();
        const level = Math.min(heading[1]!.length + 1, 5);
        out.push(`<h${level}>${inline(heading[2]!)}</h${level}>`);
      } else if (line.startsWith("- ")) {
        if (!listOpen) {
          out.push("<ul>");
          listOpen = true;
        }
        out.push(`<li>${inline(line.slice(2))}</li>`);
      } else {
        closeList();
        out.push(`<p>${inline(line)}</p>`);
      }
    }
    closeList();
  }
  return out.join("\n");

  function inline(text: string): string {
    return escapeHtml(text)
      .replace(/\*\*([^*]+)\*\*/g, "<strong>$1</strong>")
      .replace(/\*([^*]+)\*/g, "<em>$1</em>");
  }
}

const WINDOW_DAYS = [7, 30, 90] as const;

export interface App {
  render(): Promise<void>;
  navigate(hash: string): Promise<void>;
  readonly session: ClientSession;
  dispose(): void;
}

export function createApp(root: HTMLElement, session: ClientSession): App {
  let chartDays: (typeof WINDOW_DAYS)[number] = 30;
  let registerDone = false;

  const app: App = {
    session,

    async navigate(hash: string): Promise<void> {
      location.hash = hash;
      await app.render();
    },

    async render(): Promise<void> {
      root.textContent = "";
      if (!session.authenticated) {
        renderAuth();
        return;
      }
      renderShell();
      const main = root.querySelector("main")!;
      const route = (location.hash || defaultRoute()).replace(/^#/, "");
      try {
        await renderScreen(main as HTMLElement, route);
      } catch (err) {
        showError(err);
      }
    },

    dispose() {
      unsubscribe();
    },
  };

  const unsubscribe = onLanguageChange(() => {
    void app.render();
  });

  function defaultRoute(): string {
    return session.profile?.role === "supervisor" ? "/supervision" : "/diary/glucose";
  }

  function showError(err: unknown): void {
    let text: string;
    if (err instanceof ApiError) {
      text = err.status === 0 ? t("error.network") : err.message;
    } else if (err instanceof WriteGuardError) {
      text = t("subject.readonly", { name: session.subjectName });
    } else {
      text = t("error.generic");
    }
    flash(text, true);
  }

  function flash(text: string, isError = false): void {
    let box = root.querySelector<HTMLElement>("#status");
    if (!box) {
      box = el("div", { id: "status" });
      root.prepend(box);
    }
    box.textContent = text;
    box.className = isError ? "error" : "ok";
  }

  // -- authentication screens ----------------------------------------------

  function renderAuth(): void {
    const showRegister = location.hash === "#/register";
    const form = el("form", { class: "card auth" },
      el("h1", {}, t(showRegister ? "register.title" : "login.title")));

    const email = el("input", { name: "email", type: "email", required: "required" });
    const password = el("input", { name: "password", type: "password", required: "required" });

    let name: HTMLInputElement | undefined;
    let role: HTMLSelectElement | undefined;
    let language: HTMLSelectElement | undefined;
    if (showRegister) {
      name = el("input", { name: "display_name", required: "required" });
      form.append(el("label", {}, t("register.name"), name));
    }
    form.append(
      el("label", {}, t("login.email"), email),
      el("label", {}, t("login.password"), password),
    );
    if (showRegister) {
      role = el("select", { name: "role" },
        el("option", { value: "patient" }, t("register.role.patient")),
        el("option", { value: "supervisor" }, t("register.role.supervisor")));
      language = el("select", { name: "language" },
        el("option", { value: "en" }, t("lang.en")),
        el("option", { value: "es" }, t("lang.es")));
      language.value = currentLanguage();
      form.append(
        el("label", {}, t("register.role"), role),
        el("label", {}, t("register.language"), language),
      );
    }

    const submit = el("button", { type: "submit" },
      t(showRegister ? "register.submit" : "login.submit"));
    const swap = el("a", {
      href: showRegister ? "#/login" : "#/register",
      onclick: () => {
        registerDone = false;
        setTimeout(() => void app.render(), 0);
      },
    }, t(showRegister ? "register.to_login" : "login.to_register"));
    form.append(submit, el("p", {}, swap));

    form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void (async () => {
        try {
          if (showRegister) {
            await session.api.register({
              role: (role!.value as "patient" | "supervisor"),
              display_name: name!.value,
              email: email.value,
              password: password.value,
              language: language!.value as LanguageCode,
            });
            registerDone = true;
            location.hash = "#/login";
            await app.render();
            flash(t("register.done"));
          } else {
            await session.login(email.value, password.value);
            location.hash = "#" + defaultRoute();
            await app.render();
          }
        } catch (err) {
          showError(err);
        }
      })();
    });

    const wrap = el("div", { class: "auth-wrap" },
      el("p", { class: "tagline" }, `${t("app.title")} · ${t("app.tagline")}`),
      form,
      languageBar(),
    );
    root.append(wrap);
    if (registerDone && !showRegister) flash(t("register.done"));
  }

  function languageBar(): HTMLElement {
    const bar = el("div", { class: "langbar" });
    for (const lang of ["en", "es"] as const) {
      bar.append(el("button", {
        type: "button",
        "data-lang": lang,
        class: currentLanguage() === lang ? "active" : "",
        onclick: () => {
          void (async () => {
            try {
              if (session.authenticated) {
                await session.api.putLanguage(lang);
                await session.refreshProfile();
              }
              setLanguage(lang);
              await app.render();
            } catch (err) {
              showError(err);
            }
          })();
        },
      }, lang.toUpperCase()));
    }
    return bar;
  }

  // -- authenticated shell --------------------------------------------------

  function renderShell(): void {
    const profile = session.profile!;
    const nav = el("nav", {});
    const entries: [string, MessageKey][] = [
      ["#/diary/glucose", "nav.diary"],
      ["#/charts", "nav.charts"],
      [`#/week/${mondayOf(new Date())}`, "nav.week"],
      ["#/supervision", "nav.supervision"],
      ["#/settings", "nav.settings"],
      ["#/doc/faq", "nav.faq"],
      ["#/doc/terms", "nav.terms"],
    ];
    for (const [hash, key] of entries) {
      nav.append(el("a", {
        href: hash,
        onclick: () => setTimeout(() => void app.render(), 0),
      }, t(key)));
    }
    nav.append(el("a", {
      href: "#/login",
      class: "logout",
      onclick: () => {
        void (async () => {
          await session.logout();
          await app.render();
        })();
      },
    }, t("nav.logout")));

    const header = el("header", {},
      el("span", { class: "brand" }, t("app.title")),
      nav,
      subjectSelector(),
      el("span", { class: "whoami" }, profile.display_name),
      languageBar(),
    );
    root.append(header, el("main", {}));
  }

  function subjectSelector(): HTMLElement {
    const profile = session.profile!;
    if (profile.role !== "supervisor") {
      return el("span", { class: "subject" }, t("subject.self"));
    }
    const select = el("select", {
      class: "subject",
      onchange: () => {
        session.selectSubject(select.value === "" ? null : select.value);
        void app.render();
      },
    }, el("option", { value: "" }, t("subject.self")));
    for (const patient of session.supervised) {
      select.append(el("option", { value: patient.id }, patient.display_name));
    }
    select.value = session.viewingSelf ? "" : session.subject;
    return select;
  }

  // -- routed screens -------------------------------------------------------

  async function renderScreen(main: HTMLElement, route: string): Promise<void> {
    const [, screen, arg] = route.split("/");
    switch (screen) {
      case "diary":
        return renderDiary(main, (arg ?? "glucose") as RecordType);
      case "charts":
        return renderCharts(main);
      case "week":
        return renderWeek(main, arg || mondayOf(new Date()));
      case "supervision":
        return renderSupervision(main);
      case "settings":
        return renderSettings(main);
      case "doc":
        return renderDoc(main, arg === "terms" ? "terms" : "faq");
      default:
        return renderDiary(main, "glucose");
    }
  }

  function readonlyBanner(): HTMLElement | "" {
    if (session.viewingSelf) return "" as const;
    return el("p", { class: "banner" },
      t("subject.readonly", { name: session.subjectName }));
  }

  async function renderDiary(main: HTMLElement, type: RecordType): Promise<void> {
    const tabs = el("div", { class: "tabs" });
    for (const rt of RECORD_TYPES) {
      tabs.append(el("a", {
        href: `#/diary/${rt}`,
        class: rt === type ? "active" : "",
        onclick: () => setTimeout(() => void app.render(), 0),
      }, t(`type.${rt}`)));
    }
    main.append(tabs, readonlyBanner());

    if (session.canWrite) {
      main.append(entryForm(type));
    }

    const since = new Date(Date.now() - 30 * 86400_000).toISOString().replace(/\.\d{3}Z$/, "Z");
    const list = await session.api.listRecords(session.subject, type, { from: since });
    const container = el("div", { class: "records" });
    if (list.items.length === 0) {
      container.append(el("p", { class: "empty" }, t("records.none")));
    }
    for (const record of [...list.items].reverse()) {
      const row = el("div", { class: "record", "data-id": record.id },
        el("span", { class: "when" }, fmtDateTime(recordTimestamp(record))),
        el("span", { class: "what" }, recordSummary(record)),
        el("span", { class: "note" }, record.note ?? ""),
      );
      if (session.canWrite) {
        row.append(el("button", {
          class: "delete",
          onclick: () => {
            void (async () => {
              try {
                await session.api.deleteRecord(session.subject, type, record.id);
                await app.render();
                flash(t("records.deleted"));
              } catch (err) {
                showError(err);
              }
            })();
          },
        }, t("records.delete")));
      }
      container.append(row);
    }
    main.append(container);
  }

  function entryForm(type: RecordType): HTMLElement {
    const profile = session.profile!;
    const form = el("form", { class: "card entry" },
      el("h2", {}, t("records.add")));
    const inputs = new Map<string, HTMLInputElement | HTMLSelectElement>();

    for (const field of fieldsFor(type, profile.units)) {
      let input: HTMLInputElement | HTMLSelectElement;
      if (field.kind === "select") {
        input = el("select", { name: field.name });
        for (const option of field.options ?? []) {
          input.append(el("option", { value: option.value }, t(option.labelKey)));
        }
      } else {
        input = el("input", {
          name: field.name,
          type: field.kind === "text" ? "text" : "number",
          step: field.kind === "int" ? "1" : "any",
        });
      }
      inputs.set(field.name, input);
      const label = field.unit
        ? `${t(field.labelKey)} (${field.unit})`
        : t(field.labelKey);
      form.append(el("label", {}, label, input));
    }

    if (SLOTTED.includes(type)) {
      const slot = el("select", { name: "slot" });
      for (const option of slotOptions()) {
        slot.append(el("option", { value: option.value }, option.label));
      }
      inputs.set("slot", slot);
      form.append(el("label", {}, t("field.slot"), slot));
    }

    const when = el("input", { name: "when", type: "datetime-local" });
    when.value = nowLocalInput();
    inputs.set("when", when);
    form.append(el("label", {}, t("records.when"), when));

    const note = el("input", { name: "note", type: "text" });
    inputs.set("note", note);
    form.append(el("label", {}, t("records.note"), note));

    form.append(el("button", { type: "submit" }, t("records.save")));

    form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      const values: Record<string, string> = {};
      for (const [name, input] of inputs) values[name] = input.value;
      const result = buildPayload(type, profile.units, values);
      if (!result.payload) {
        const firstBad = Object.keys(result.errors)[0]!;
        flash(`${firstBad}: ${result.errors[firstBad]}`, true);
        return;
      }
      void (async () => {
        try {
          await session.api.createRecord(session.subject, type, result.payload!);
          await app.render();
          flash(t("records.saved"));
        } catch (err) {
          showError(err);
        }
      })();
    });
    return form;
  }

  function statsTable(stats: SeriesStats, unit: string): HTMLElement {
    const rows: [MessageKey, string][] = [["stats.count", String(stats.count)]];
    if (stats.mean !== null) {
      rows.push(
        ["stats.mean", `${fmtNumber(stats.mean, 1)} ${unit}`],
        ["stats.min", `${fmtNumber(stats.min!, 1)} ${unit}`],
        ["stats.max", `${fmtNumber(stats.max!, 1)} ${unit}`],
      );
    }
    if (stats.pct_in_range !== null && stats.pct_in_range !== undefined) {
      rows.push(
        ["stats.below", `${fmtNumber(stats.pct_below!, 1)}%`],
        ["stats.in_range", `${fmtNumber(stats.pct_in_range, 1)}%`],
        ["stats.above", `${fmtNumber(stats.pct_above!, 1)}%`],
      );
    }
    const table = el("table", { class: "stats" });
    for (const [key, value] of rows) {
      table.append(el("tr", {}, el("th", {}, t(key)), el("td", {}, value)));
    }
    return table;
  }

  async function renderCharts(main: HTMLElement): Promise<void> {
    main.append(readonlyBanner());
    const picker = el("select", {
      class: "window",
      onchange: () => {
        chartDays = Number(picker.value) as typeof chartDays;
        void app.render();
      },
    });
    for (const days of WINDOW_DAYS) {
      picker.append(el("option", { value: String(days) },
        t(`charts.window.${days}` as MessageKey)));
    }
    picker.value = String(chartDays);
    main.append(el("label", { class: "windowpick" }, t("charts.window"), picker));

    const from = new Date(Date.now() - chartDays * 86400_000)
      .toISOString().replace(/\.\d{3}Z$/, "Z");
    const subject = session.subject;
    const [glucose, weight, bp] = await Promise.all([
      session.api.glucoseSeries(subject, { from }),
      session.api.weightSeries(subject, { from }),
      session.api.bpSeries(subject, { from }),
    ]);

    const section = (titleKey: MessageKey, svg: string, stats: HTMLElement, empty: boolean) => {
      const div = el("section", { class: "chart-section" }, el("h2", {}, t(titleKey)));
      if (empty) {
        div.append(el("p", { class: "empty" }, t("charts.empty")));
      } else {
        const holder = el("div", { class: "chart-holder" });
        holder.innerHTML = svg;
        div.append(holder, stats);
      }
      main.append(div);
    };

    section("charts.glucose", lineChart({
      series: [{
        label: t("charts.glucose"),
        color: "#1565c0",
        points: glucose.points.map((p) => ({ t: epochMs(p.t), value: p.value })),
      }],
      band: { low: glucose.targets.low, high: glucose.targets.high, label: t("charts.band") },
      unit: glucose.unit,
    }), statsTable(glucose.stats, glucose.unit), glucose.points.length === 0);

    const weightStats = statsTable(weight.stats, weight.unit);
    const bmiPoints = weight.points.filter((p) => p.bmi !== null);
    section("charts.weight", lineChart({
      series: [
        {
          label: t("type.weight"),
          color: "#6a1b9a",
          points: weight.points.map((p) => ({ t: epochMs(p.t), value: p.weight })),
        },
        {
          label: t("stats.bmi"),
          color: "#ef6c00",
          points: bmiPoints.map((p) => ({ t: epochMs(p.t), value: p.bmi! })),
        },
      ],
      unit: weight.unit,
    }), weightStats, weight.points.length === 0);

    section("charts.bp", lineChart({
      series: [
        {
          label: t("field.systolic"),
          color: "#c62828",
          points: bp.points.map((p) => ({ t: epochMs(p.t), value: p.systolic })),
        },
        {
          label: t("field.diastolic"),
          color: "#2e7d32",
          points: bp.points.map((p) => ({ t: epochMs(p.t), value: p.diastolic })),
        },
      ],
      band: { low: bp.targets.dia_high, high: bp.targets.sys_high, label: t("charts.band") },
      unit: "mmHg",
    }), statsTable(bp.stats.systolic, "mmHg"), bp.points.length === 0);
  }

  async function renderWeek(main: HTMLElement, weekStart: string): Promise<void> {
    main.append(readonlyBanner());
    const summary = await session.api.weeklySummary(session.subject, weekStart);
    const nav = el("div", { class: "weeknav" },
      el("a", {
        href: `#/week/${shiftIsoDate(weekStart, -7)}`,
        onclick: () => setTimeout(() => void app.render(), 0),
      }, `← ${t("week.prev")}`),
      el("strong", {}, t("week.title", { date: summary.week_start })),
      el("a", {
        href: `#/week/${shiftIsoDate(weekStart, 7)}`,
        onclick: () => setTimeout(() => void app.render(), 0),
      }, `${t("week.next")} →`),
    );
    const holder = el("div", { class: "weekly-holder" });
    holder.innerHTML = renderWeeklyTable(summary);
    main.append(nav, holder);
  }

  async function renderSupervision(main: HTMLElement): Promise<void> {
    const profile = session.profile!;
    if (profile.role === "supervisor") {
      await session.refreshSupervised();
      const section = el("section", {}, el("h2", {}, t("sup.supervised")));
      if (session.supervised.length === 0) {
        section.append(el("p", { class: "empty" }, t("sup.supervised.none")));
      }
      for (const patient of session.supervised) {
        section.append(el("div", { class: "userrow", "data-id": patient.id },
          el("span", {}, `${patient.display_name} (${patient.email})`),
          el("button", {
            onclick: () => {
              void (async () => {
                try {
                  await session.api.dissociateSupervisor(patient.id, profile.id);
                  await session.refreshSupervised();
                  await app.render();
                  flash(t("sup.dissociated"));
                } catch (err) {
                  showError(err);
                }
              })();
            },
          }, t("sup.dissociate")),
        ));
      }
      main.append(section);
      return;
    }

    const mine = await session.api.listSupervisors(profile.id);
    const listSection = el("section", {}, el("h2", {}, t("sup.my_supervisors")));
    if (mine.items.length === 0) {
      listSection.append(el("p", { class: "empty" }, t("sup.none")));
    }
    for (const supervisor of mine.items) {
      listSection.append(el("div", { class: "userrow", "data-id": supervisor.id },
        el("span", {}, `${supervisor.display_name} (${supervisor.email})`),
        el("button", {
          onclick: () => {
            void (async () => {
              try {
                await session.api.dissociateSupervisor(profile.id, supervisor.id);
                await app.render();
                flash(t("sup.dissociated"));
              } catch (err) {
                showError(err);
              }
            })();
          },
        }, t("sup.dissociate")),
      ));
    }

    const results = el("div", { class: "results" });
    const query = el("input", { type: "search", name: "q" });
    const searchForm = el("form", { class: "search" },
      el("label", {}, t("sup.search"), query),
      el("button", { type: "submit" }, "→"),
    );
    searchForm.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void (async () => {
        try {
          const found = await session.api.searchSupervisors(query.value);
          results.textContent = "";
          for (const user of found.items) {
            results.append(el("div", { class: "userrow", "data-id": user.id },
              el("span", {}, `${user.display_name} (${user.email})`),
              el("button", {
                onclick: () => {
                  void (async () => {
                    try {
                      await session.api.associateSupervisor(profile.id, user.id);
                      await app.render();
                      flash(t("sup.associated", { name: user.display_name }));
                    } catch (err) {
                      showError(err);
                    }
                  })();
                },
              }, t("sup.associate")),
            ));
          }
        } catch (err) {
          showError(err);
        }
      })();
    });

    main.append(el("h1", {}, t("sup.title")), listSection, searchForm, results);
  }

  async function renderSettings(main: HTMLElement): Promise<void> {
    const profile = session.profile!;
    const isPatient = profile.role === "patient";

    if (isPatient && profile.targets) {
      const targets = profile.targets;
      const glucoseUnit = profile.units.glucose;
      const low = el("input", { name: "glucose_low", type: "number", step: "any" });
      const high = el("input", { name: "glucose_high", type: "number", step: "any" });
      const sys = el("input", { name: "bp_sys_high", type: "number", step: "1" });
      const dia = el("input", { name: "bp_dia_high", type: "number", step: "1" });
      low.value = String(targets.glucose_low);
      high.value = String(targets.glucose_high);
      sys.value = String(targets.bp_sys_high);
      dia.value = String(targets.bp_dia_high);
      const form = el("form", { class: "card", id: "targets" },
        el("h2", {}, t("settings.targets")),
        el("label", {}, t("settings.glucose_low", { unit: glucoseUnit }), low),
        el("label", {}, t("settings.glucose_high", { unit: glucoseUnit }), high),
        el("label", {}, t("settings.bp_sys"), sys),
        el("label", {}, t("settings.bp_dia"), dia),
        el("button", { type: "submit" }, t("settings.save")),
      );
      form.addEventListener("submit", (ev) => {
        ev.preventDefault();
        void (async () => {
          try {
            await session.api.putTargets({
              glucose_low: Number(low.value),
              glucose_high: Number(high.value),
              bp_sys_high: Number(sys.value),
              bp_dia_high: Number(dia.value),
            });
            await session.refreshProfile();
            await app.render();
            flash(t("settings.saved"));
          } catch (err) {
            showError(err);
          }
        })();
      });
      main.append(form);
    }

    const glucoseSel = el("select", { name: "glucose" },
      el("option", { value: "mg/dL" }, "mg/dL"),
      el("option", { value: "mmol/L" }, "mmol/L"));
    const weightSel = el("select", { name: "weight" },
      el("option", { value: "kg" }, "kg"),
      el("option", { value: "lbs" }, "lbs"));
    glucoseSel.value = profile.units.glucose;
    weightSel.value = profile.units.weight;
    const unitsForm = el("form", { class: "card", id: "units" },
      el("h2", {}, t("settings.units")),
      el("label", {}, t("settings.unit.glucose"), glucoseSel),
      el("label", {}, t("settings.unit.weight"), weightSel),
      el("button", { type: "submit" }, t("settings.save")),
    );
    unitsForm.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void (async () => {
        try {
          await session.api.putUnits({ glucose: glucoseSel.value, weight: weightSel.value });
          await session.refreshProfile();
          await app.render();
          flash(t("settings.saved"));
        } catch (err) {
          showError(err);
        }
      })();
    });
    main.append(unitsForm);

    if (isPatient) {
      const height = el("input", { name: "height_m", type: "number", step: "any" });
      height.value = profile.height_m === null ? "" : String(profile.height_m);
      const profileForm = el("form", { class: "card", id: "profile" },
        el("h2", {}, t("settings.height")),
        el("label", {}, t("settings.height"), height),
        el("button", { type: "submit" }, t("settings.save")),
      );
      profileForm.addEventListener("submit", (ev) => {
        ev.preventDefault();
        void (async () => {
          try {
            await session.api.putProfile({
              height_m: height.value === "" ? null : Number(height.value),
            });
            await session.refreshProfile();
            await app.render();
            flash(t("settings.saved"));
          } catch (err) {
            showError(err);
          }
        })();
      });
      main.append(profileForm);
    }

    main.append(el("p", { class: "hint" },
      `${t("settings.language")}: ${t(`lang.${currentLanguage()}` as MessageKey)}`));
  }

  async function renderDoc(main: HTMLElement, name: "faq" | "terms"): Promise<void> {
    const doc = await session.api.content(name, currentLanguage());
    const article = el("article", { class: "doc", "data-language": doc.language });
    article.innerHTML = mdToHtml(doc.body);
    main.append(article);
  }

  return app;
}
