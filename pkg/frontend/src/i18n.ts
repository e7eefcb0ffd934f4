// Message catalogs for every piece of chrome text. English is the reference
// catalog; the Spanish one is type-checked against it so the two can never
// drift apart silently.

const en = {
  "app.title": "glucolog",
  "app.tagline": "Your diabetes diary",

  "nav.diary": "Diary",
  "nav.charts": "Charts",
  "nav.week": "Weekly summary",
  "nav.supervision": "Supervision",
  "nav.settings": "Settings",
  "nav.faq": "FAQ",
  "nav.terms": "Terms",
  "nav.logout": "Log out",

  "login.title": "Sign in",
  "login.email": "Email",
  "login.password": "Password",
  "login.submit": "Sign in",
  "login.to_register": "No account yet? Register",
  "register.title": "Create account",
  "register.name": "Display name",
  "register.role": "Account type",
  "register.role.patient": "Patient",
  "register.role.supervisor": "Supervisor (read-only access granted by a patient)",
  "register.language": "Language",
  "register.submit": "Register",
  "register.to_login": "Already registered? Sign in",
  "register.done": "Account created. You can sign in now.",

  "subject.viewing": "Viewing: {name}",
  "subject.self": "My data",
  "subject.readonly": "Read-only: this diary belongs to {name}.",

  "records.add": "Add entry",
  "records.none": "No entries in this period.",
  "records.when": "When",
  "records.note": "Comment (optional)",
  "records.save": "Save",
  "records.delete": "Delete",
  "records.saved": "Saved.",
  "records.deleted": "Entry deleted.",

  "type.glucose": "Blood glucose",
  "type.insulin": "Insulin",
  "type.carbs": "Carbohydrates",
  "type.medication": "Medication",
  "type.activity": "Physical activity",
  "type.weight": "Weight",
  "type.blood_pressure": "Blood pressure",

  "field.value": "Value",
  "field.units": "Units (IU)",
  "field.insulin_kind": "Insulin type",
  "field.grams": "Grams",
  "field.name": "Name",
  "field.dose": "Dose",
  "field.intensity": "Intensity",
  "field.duration": "Duration (minutes)",
  "field.systolic": "Systolic",
  "field.diastolic": "Diastolic",
  "field.slot": "Meal",
  "field.slot.none": "No meal context",

  "meal.breakfast": "Breakfast",
  "meal.lunch": "Lunch",
  "meal.snack": "Snack",
  "meal.dinner": "Dinner",
  "relation.before": "before",
  "relation.after": "after",

  "intensity.low": "Low",
  "intensity.moderate": "Moderate",
  "intensity.high": "High",

  "charts.glucose": "Glucose evolution",
  "charts.weight": "Weight and BMI",
  "charts.bp": "Blood pressure",
  "charts.window": "Period",
  "charts.window.7": "Last 7 days",
  "charts.window.30": "Last 30 days",
  "charts.window.90": "Last 90 days",
  "charts.empty": "Nothing recorded in this period yet.",
  "charts.band": "Target range",

  "stats.count": "Readings",
  "stats.mean": "Mean",
  "stats.min": "Min",
  "stats.max": "Max",
  "stats.in_range": "In range",
  "stats.below": "Below",
  "stats.above": "Above",
  "stats.bmi": "BMI",

  "week.title": "Week of {date}",
  "week.prev": "Previous week",
  "week.next": "Next week",
  "week.activity": "Activity",
  "week.glucose_before": "Glucose before",
  "week.glucose_after": "Glucose after",
  "week.insulin": "Insulin",
  "week.carbs": "Carbs",
  "week.empty_cell": "—",

  "sup.title": "Supervision",
  "sup.my_supervisors": "My supervisors",
  "sup.search": "Find a supervisor by name or email",
  "sup.associate": "Grant access",
  "sup.dissociate": "Revoke",
  "sup.none": "Nobody has access to your diary.",
  "sup.supervised": "Patients I supervise",
  "sup.supervised.none": "No patient has granted you access yet.",
  "sup.associated": "{name} can now read your diary.",
  "sup.dissociated": "Access revoked.",

  "settings.title": "Settings",
  "settings.targets": "Target ranges",
  "settings.glucose_low": "Glucose low ({unit})",
  "settings.glucose_high": "Glucose high ({unit})",
  "settings.bp_sys": "Systolic high (mmHg)",
  "settings.bp_dia": "Diastolic high (mmHg)",
  "settings.units": "Units",
  "settings.unit.glucose": "Glucose unit",
  "settings.unit.weight": "Weight unit",
  "settings.language": "Language",
  "settings.height": "Height (m)",
  "settings.save": "Save settings",
  "settings.saved": "Settings saved.",

  "lang.en": "English",
  "lang.es": "Spanish",

  "error.network": "Could not reach the server.",
  "error.required": "This field is required.",
  "error.number": "Enter a number.",
  "error.generic": "Something went wrong.",

  "confirm.delete": "Delete this entry?",
  "loading": "Loading…",
} as const;

export type MessageKey = keyof typeof en;
type Catalog = Record<MessageKey, string>;

const es: Catalog = {
  "app.title": "glucolog",
  "app.tagline": "Tu diario de diabetes",

  "nav.diary": "Diario",
  "nav.charts": "Gráficas",
  "nav.week": "Resumen semanal",
  "nav.supervision": "Supervisión",
  "nav.settings": "Ajustes",
  "nav.faq": "Preguntas frecuentes",
  "nav.terms": "Condiciones",
  "nav.logout": "Cerrar sesión",

  "login.title": "Iniciar sesión",
  "login.email": "Correo electrónico",
  "login.password": "Contraseña",
  "login.submit": "Entrar",
  "login.to_register": "¿Sin cuenta? Regístrate",
  "register.title": "Crear cuenta",
  "register.name": "Nombre",
  "register.role": "Tipo de cuenta",
  "register.role.patient": "Paciente",
  "register.role.supervisor": "Supervisor (acceso de solo lectura concedido por un paciente)",
  "register.language": "Idioma",
  "register.submit": "Registrarse",
  "register.to_login": "¿Ya tienes cuenta? Inicia sesión",
  "register.done": "Cuenta creada. Ya puedes iniciar sesión.",

  "subject.viewing": "Viendo: {name}",
  "subject.self": "Mis datos",
  "subject.readonly": "Solo lectura: este diario pertenece a {name}.",

  "records.add": "Añadir registro",
  "records.none": "No hay registros en este periodo.",
  "records.when": "Fecha y hora",
  "records.note": "Comentario (opcional)",
  "records.save": "Guardar",
  "records.delete": "Eliminar",
  "records.saved": "Guardado.",
  "records.deleted": "Registro eliminado.",

  "type.glucose": "Glucemia",
  "type.insulin": "Insulina",
  "type.carbs": "Hidratos de carbono",
  "type.medication": "Medicación",
  "type.activity": "Actividad física",
  "type.weight": "Peso",
  "type.blood_pressure": "Presión arterial",

  "field.value": "Valor",
  "field.units": "Unidades (UI)",
  "field.insulin_kind": "Tipo de insulina",
  "field.grams": "Gramos",
  "field.name": "Nombre",
  "field.dose": "Dosis",
  "field.intensity": "Intensidad",
  "field.duration": "Duración (minutos)",
  "field.systolic": "Sistólica",
  "field.diastolic": "Diastólica",
  "field.slot": "Comida",
  "field.slot.none": "Sin contexto de comida",

  "meal.breakfast": "Desayuno",
  "meal.lunch": "Comida",
  "meal.snack": "Merienda",
  "meal.dinner": "Cena",
  "relation.before": "antes",
  "relation.after": "después",

  "intensity.low": "Baja",
  "intensity.moderate": "Moderada",
  "intensity.high": "Alta",

  "charts.glucose": "Evolución de la glucemia",
  "charts.weight": "Peso e IMC",
  "charts.bp": "Presión arterial",
  "charts.window": "Periodo",
  "charts.window.7": "Últimos 7 días",
  "charts.window.30": "Últimos 30 días",
  "charts.window.90": "Últimos 90 días",
  "charts.empty": "Todavía no hay registros en este periodo.",
  "charts.band": "Rango objetivo",

  "stats.count": "Registros",
  "stats.mean": "Media",
  "stats.min": "Mín",
  "stats.max": "Máx",
  "stats.in_range": "En rango",
  "stats.below": "Por debajo",
  "stats.above": "Por encima",
  "stats.bmi": "IMC",

  "week.title": "Semana del {date}",
  "week.prev": "Semana anterior",
  "week.next": "Semana siguiente",
  "week.activity": "Actividad",
  "week.glucose_before": "Glucemia antes",
  "week.glucose_after": "Glucemia después",
  "week.insulin": "Insulina",
  "week.carbs": "Hidratos",
  "week.empty_cell": "—",

  "sup.title": "Supervisión",
  "sup.my_supervisors": "Mis supervisores",
  "sup.search": "Busca un supervisor por nombre o correo",
  "sup.associate": "Conceder acceso",
  "sup.dissociate": "Revocar",
  "sup.none": "Nadie tiene acceso a tu diario.",
  "sup.supervised": "Pacientes que superviso",
  "sup.supervised.none": "Ningún paciente te ha concedido acceso todavía.",
  "sup.associated": "{name} ya puede leer tu diario.",
  "sup.dissociated": "Acceso revocado.",

  "settings.title": "Ajustes",
  "settings.targets": "Rangos objetivo",
  "settings.glucose_low": "Glucemia baja ({unit})",
  "settings.glucose_high": "Glucemia alta ({unit})",
  "settings.bp_sys": "Sistólica alta (mmHg)",
  "settings.bp_dia": "Diastólica alta (mmHg)",
  "settings.units": "Unidades",
  "settings.unit.glucose": "Unidad de glucemia",
  "settings.unit.weight": "Unidad de peso",
  "settings.language": "Idioma",
  "settings.height": "Estatura (m)",
  "settings.save": "Guardar ajustes",
  "settings.saved": "Ajustes guardados.",

  "lang.en": "Inglés",
  "lang.es": "Español",

  "error.network": "No se pudo conectar con el servidor.",
  "error.required": "Este campo es obligatorio.",
  "error.number": "Introduce un número.",
  "error.generic": "Algo ha salido mal.",

  "confirm.delete": "¿Eliminar este registro?",
  "loading": "Cargando…",
};

const catalogs: Record<"en" | "es", Catalog> = { en, es };

let current: "en" | "es" = "en";
const listeners = new Set<() => void>();

export function currentLanguage(): "en" | "es" {
  return current;
}

export function setLanguage(lang: "en" | "es"): void {
  if (lang === current) return;
  current = lang;
  for (const fn of listeners) fn();
}

/** Re-render hooks; returns an unsubscribe function. */
export function onLanguageChange(fn: () => void): () => void {
  listeners.add(fn);
  return () => listeners.delete(fn);
}

export function t(key: MessageKey, params?: Record<string, string | number>): string {
  let text: string = catalogs[current][key];
  if (params) {
    for (const [name, value] of Object.entries(params)) {
      text = text.replaceAll(`{${name}}`, String(value));
    }
  }
  return text;
}

export function catalogKeys(): MessageKey[] {
  return Object.keys(en) as MessageKey[];
}
