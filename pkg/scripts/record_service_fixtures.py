#!/usr/bin/env python3
"""Record play-service responses as JSON fixtures for the browser client.

Runs the create -> legal-moves -> move -> challenge flow against an in-process
app and writes one file per response to frontend/fixtures/.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from qgames.service import create_app


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    session = client.post(
        "/sessions",
        json={"game": "nim:1,1,2", "ruleset": "D", "width": 2, "validation": "honor"},
    ).json()
    sid = session["id"]
    legal = client.get(f"/sessions/{sid}/legal-moves").json()
    moved = client.post(f"/sessions/{sid}/moves", json={"qmove": "[1:-1 & 2:-1]"}).json()
    challenge = client.post(f"/sessions/{sid}/challenge").json()

    rejected = None
    strict = client.post(
        "/sessions",
        json={"game": "nim:2,2", "ruleset": "A", "width": 2, "validation": "strict"},
    ).json()
    response = client.post(f"/sessions/{strict['id']}/moves", json={"qmove": "[1:-1]"})
    rejected = {"status": response.status_code, "body": response.json()}

    fixtures = {
        "create.json": session,
        "legal_moves.json": legal,
        "move.json": moved,
        "challenge.json": challenge,
        "rejection.json": rejected,
    }
    for name, payload in fixtures.items():
        (out / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        print(f"wrote {out / name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
