import { describe, expect, it } from "vitest";

import { ClientSession, WriteGuardError } from "../src/session.js";
import type { Profile } from "../src/types.js";

function profileOf(id: string, role: "patient" | "supervisor"): Profile {
  return {
    id,
    role,
    display_name: id,
    email: `${id}@example.org`,
    language: "en",
    units: { glucose: "mg/dL", weight: "kg" },
    height_m: null,
    targets: null,
  };
}

interface Recorded {
  method: string;
  url: string;
}

/** Session whose API answers everything with {} and records each request. */
function sessionWith(profile: Profile, supervised: { id: string; display_name: string; email: string }[] = []) {
  const requests: Recorded[] = [];
  const session = new ClientSession("http://svc", async (url, init) => {
    requests.push({ method: init?.method ?? "GET", url });
    if (url.endsWith("/v1/supervised")) {
      return new Response(JSON.stringify({ items: supervised }), { status: 200 });
    }
    return new Response(JSON.stringify({ items: [], count: 0 }), { status: 200 });
  });
  session.profile = profile;
  session.supervised = profile.role === "supervisor" ? supervised : [];
  return { session, requests };
}

describe("subject selection", () => {
  it("defaults to the signed-in user", () => {
    const { session } = sessionWith(profileOf("p1", "patient"));
    expect(session.subject).toBe("p1");
    expect(session.viewingSelf).toBe(true);
    expect(session.canWrite).toBe(true);
  });

  it("patients cannot select anyone else", () => {
    const { session } = sessionWith(profileOf("p1", "patient"));
    expect(() => session.selectSubject("p2")).toThrow(/own diary/);
  });

  it("supervisors can select only linked patients", () => {
    const linked = [{ id: "p1", display_name: "Ana", email: "ana@example.org" }];
    const { session } = sessionWith(profileOf("s1", "supervisor"), linked);
    session.selectSubject("p1");
    expect(session.subject).toBe("p1");
    expect(session.subjectName).toBe("Ana");
    expect(session.canWrite).toBe(false);

    expect(() => session.selectSubject("p9")).toThrow(/not a supervised patient/);
  });

  it("a dissociated patient disappears from the selection immediately", async () => {
    const linked = [{ id: "p1", display_name: "Ana", email: "ana@example.org" }];
    const { session } = sessionWith(profileOf("s1", "supervisor"), []);
    session.supervised = linked;
    session.selectSubject("p1");

    await session.refreshSupervised(); // server now reports no links
    expect(session.supervised).toEqual([]);
    expect(session.subject).toBe("s1");
    expect(session.viewingSelf).toBe(true);
  });
});

describe("write guard", () => {
  it("blocks any record write for a non-self subject before fetch", async () => {
    const linked = [{ id: "p1", display_name: "Ana", email: "ana@example.org" }];
    const { session, requests } = sessionWith(profileOf("s1", "supervisor"), linked);
    session.selectSubject("p1");

    await expect(session.api.createRecord("p1", "glucose", { value: 100 }))
      .rejects.toBeInstanceOf(WriteGuardError);
    await expect(session.api.deleteRecord("p1", "glucose", "r1"))
      .rejects.toBeInstanceOf(WriteGuardError);
    await expect(session.api.updateRecord("p1", "glucose", "r1", {}))
      .rejects.toBeInstanceOf(WriteGuardError);
    expect(requests).toHaveLength(0);
  });

  it("allows reads of the supervised subject", async () => {
    const linked = [{ id: "p1", display_name: "Ana", email: "ana@example.org" }];
    const { session, requests } = sessionWith(profileOf("s1", "supervisor"), linked);
    session.selectSubject("p1");
    await session.api.listRecords("p1", "glucose");
    expect(requests).toHaveLength(1);
    expect(requests[0]?.method).toBe("GET");
  });

  it("allows a patient's writes to their own diary", async () => {
    const { session, requests } = sessionWith(profileOf("p1", "patient"));
    await session.api.createRecord("p1", "glucose", { value: 100 });
    expect(requests).toHaveLength(1);
    expect(requests[0]?.method).toBe("POST");
  });

  it("blocks a patient's stray write to another patient's diary too", async () => {
    const { session, requests } = sessionWith(profileOf("p1", "patient"));
    await expect(session.api.createRecord("p2", "glucose", { value: 100 }))
      .rejects.toBeInstanceOf(WriteGuardError);
    expect(requests).toHaveLength(0);
  });
});
