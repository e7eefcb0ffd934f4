// Thin typed client over fetch. Every call either resolves with the parsed
// payload or rejects with an ApiError carrying the server's stable error
// code and its localized message.

import type {
  ApiErrorBody,
  ApiRecord,
  BpSeries,
  ContentDoc,
  GlucoseSeries,
  LanguageCode,
  LinkOut,
  LoginResponse,
  Profile,
  RecordList,
  RecordType,
  Role,
  Targets,
  UserList,
  WeeklySummary,
  WeightSeries,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly details?: unknown,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface RegisterPayload {
  role: Role;
  display_name: string;
  email: string;
  password: string;
  language?: LanguageCode;
}

export interface TimeWindow {
  from?: string;
  to?: string;
}

function query(params: Record<string, string | undefined>): string {
  const pairs = Object.entries(params).filter(([, v]) => v !== undefined) as [string, string][];
  if (pairs.length === 0) return "";
  return "?" + new URLSearchParams(pairs).toString();
}

export class ApiClient {
  token: string | null = null;

  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    /** Called before every request; throwing here aborts the call. */
    private readonly beforeRequest?: (method: string, path: string) => void,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    this.beforeRequest?.(method, path);
    const headers: Record<string, string> = {};
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    if (body !== undefined) headers["Content-Type"] = "application/json";

    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path, {
        method,
        headers,
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, "network", String(err));
    }

    if (resp.status === 204) return undefined as T;
    const text = await resp.text();
    const payload: unknown = text ? JSON.parse(text) : null;
    if (!resp.ok) {
      const envelope = payload as ApiErrorBody | null;
      if (envelope && typeof envelope === "object" && "error" in envelope) {
        const e = envelope.error;
        throw new ApiError(e.status, e.code, e.message, e.details);
      }
      throw new ApiError(resp.status, "http_error", `HTTP ${resp.status}`);
    }
    return payload as T;
  }

  // -- auth -----------------------------------------------------------------

  register(payload: RegisterPayload): Promise<Profile> {
    return this.request("POST", "/v1/auth/register", payload);
  }

  async login(email: string, password: string): Promise<LoginResponse> {
    const out = await this.request<LoginResponse>("POST", "/v1/auth/login", { email, password });
    this.token = out.token;
    return out;
  }

  async logout(): Promise<void> {
    await this.request("POST", "/v1/auth/logout");
    this.token = null;
  }

  me(): Promise<Profile> {
    return this.request("GET", "/v1/me");
  }

  // -- records --------------------------------------------------------------

  listRecords(patient: string, type: RecordType, w: TimeWindow = {}): Promise<RecordList> {
    return this.request("GET",
      `/v1/patients/${patient}/records/${type}${query({ from: w.from, to: w.to })}`);
  }

  createRecord(patient: string, type: RecordType, body: object): Promise<ApiRecord> {
    return this.request("POST", `/v1/patients/${patient}/records/${type}`, body);
  }

  updateRecord(patient: string, type: RecordType, id: string, body: object): Promise<ApiRecord> {
    return this.request("PUT", `/v1/patients/${patient}/records/${type}/${id}`, body);
  }

  deleteRecord(patient: string, type: RecordType, id: string): Promise<void> {
    return this.request("DELETE", `/v1/patients/${patient}/records/${type}/${id}`);
  }

  // -- statistics -----------------------------------------------------------

  glucoseSeries(patient: string, w: TimeWindow = {}): Promise<GlucoseSeries> {
    return this.request("GET",
      `/v1/patients/${patient}/stats/glucose-series${query({ from: w.from, to: w.to })}`);
  }

  weightSeries(patient: string, w: TimeWindow = {}): Promise<WeightSeries> {
    return this.request("GET",
      `/v1/patients/${patient}/stats/weight-bmi-series${query({ from: w.from, to: w.to })}`);
  }

  bpSeries(patient: string, w: TimeWindow = {}): Promise<BpSeries> {
    return this.request("GET",
      `/v1/patients/${patient}/stats/bp-series${query({ from: w.from, to: w.to })}`);
  }

  weeklySummary(patient: string, weekStart: string): Promise<WeeklySummary> {
    return this.request("GET",
      `/v1/patients/${patient}/stats/weekly-summary${query({ week_start: weekStart })}`);
  }

  // -- supervision ----------------------------------------------------------

  searchSupervisors(q: string): Promise<UserList> {
    return this.request("GET", `/v1/supervisors/search${query({ q })}`);
  }

  associateSupervisor(patient: string, supervisorId: string): Promise<LinkOut> {
    return this.request("POST", `/v1/patients/${patient}/supervisors`,
      { supervisor_id: supervisorId });
  }

  dissociateSupervisor(patient: string, supervisorId: string): Promise<void> {
    return this.request("DELETE", `/v1/patients/${patient}/supervisors/${supervisorId}`);
  }

  listSupervisors(patient: string): Promise<UserList> {
    return this.request("GET", `/v1/patients/${patient}/supervisors`);
  }

  listSupervised(): Promise<UserList> {
    return this.request("GET", "/v1/supervised");
  }

  // -- settings -------------------------------------------------------------

  putTargets(targets: Targets): Promise<Profile> {
    return this.request("PUT", "/v1/settings/targets", targets);
  }

  putUnits(units: { glucose?: string; weight?: string }): Promise<Profile> {
    return this.request("PUT", "/v1/settings/units", units);
  }

  putLanguage(language: LanguageCode): Promise<Profile> {
    return this.request("PUT", "/v1/settings/language", { language });
  }

  putProfile(fields: { display_name?: string; height_m?: number | null }): Promise<Profile> {
    return this.request("PUT", "/v1/settings/profile", fields);
  }

  // -- content --------------------------------------------------------------

  content(name: "faq" | "terms", lang?: LanguageCode): Promise<ContentDoc> {
    return this.request("GET", `/v1/content/${name}${query({ lang })}`);
  }
}
