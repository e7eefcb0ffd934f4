// The single piece of client-side state: who is signed in, whose diary is
// being viewed, and the guarantee that this client never sends a write for
// anyone else's diary. The guard runs inside the API client itself, so no
// screen can bypass it by accident.

import { ApiClient, type FetchLike } from "./api.js";
import { setLanguage } from "./i18n.js";
import type { Profile, PublicUser } from "./types.js";

export class WriteGuardError extends Error {
  constructor(path: string) {
    super(`write blocked: ${path} does not belong to the signed-in user`);
    this.name = "WriteGuardError";
  }
}

const RECORD_PATH = /^\/v1\/patients\/([^/]+)\//;

export class ClientSession {
  readonly api: ApiClient;
  profile: Profile | null = null;
  /** Patients this supervisor may read; always empty for patients. */
  supervised: PublicUser[] = [];
  private subjectId: string | null = null;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.api = new ApiClient(baseUrl, fetchFn, (method, path) => this.guard(method, path));
  }

  private guard(method: string, path: string): void {
    if (method === "GET" || !this.profile) return;
    const m = RECORD_PATH.exec(path);
    if (m && m[1] !== this.profile.id) {
      throw new WriteGuardError(path);
    }
  }

  get authenticated(): boolean {
    return this.profile !== null;
  }

  /** The diary currently on screen; the signed-in user unless a supervisor
   *  picked one of their patients. */
  get subject(): string {
    if (this.subjectId) return this.subjectId;
    if (!this.profile) throw new Error("not signed in");
    return this.profile.id;
  }

  get viewingSelf(): boolean {
    return this.profile !== null && this.subject === this.profile.id;
  }

  get subjectName(): string {
    if (this.viewingSelf) return this.profile?.display_name ?? "";
    return this.supervised.find((u) => u.id === this.subjectId)?.display_name ?? this.subject;
  }

  /** Writes are only legal when the signed-in patient views their own diary. */
  get canWrite(): boolean {
    return this.profile?.role === "patient" && this.viewingSelf;
  }

  async login(email: string, password: string): Promise<void> {
    await this.api.login(email, password);
    this.profile = await this.api.me();
    setLanguage(this.profile.language);
    this.subjectId = null;
    await this.refreshSupervised();
  }

  async logout(): Promise<void> {
    try {
      await this.api.logout();
    } finally {
      this.profile = null;
      this.subjectId = null;
      this.supervised = [];
    }
  }

  async refreshSupervised(): Promise<void> {
    if (this.profile?.role !== "supervisor") {
      this.supervised = [];
      return;
    }
    this.supervised = (await this.api.listSupervised()).items;
    // a dissociated patient must vanish from the selector immediately
    if (this.subjectId && !this.supervised.some((u) => u.id === this.subjectId)) {
      this.subjectId = null;
    }
  }

  selectSubject(id: string | null): void {
    if (!this.profile) throw new Error("not signed in");
    if (id === null || id === this.profile.id) {
      this.subjectId = null;
      return;
    }
    if (this.profile.role !== "supervisor") {
      throw new Error("patients can only view their own diary");
    }
    if (!this.supervised.some((u) => u.id === id)) {
      throw new Error(`not a supervised patient: ${id}`);
    }
    this.subjectId = id;
  }

  /** Re-read the profile after a settings change. */
  async refreshProfile(): Promise<void> {
    this.profile = await this.api.me();
    setLanguage(this.profile.language);
  }
}
