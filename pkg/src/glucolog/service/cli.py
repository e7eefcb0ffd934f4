"""Operational entry points: serve, backup-now, import, export, seed."""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from ..errors import GlucologError
from ..persistence import BackupScheduler, MemoryStore, SqliteStore, archive_name, backup_snapshot
from ..persistence.store import Store
from .app import create_app
from .config import ServiceConfig, load_config
from .csv_io import export_csv, import_csv
from .seed import SEED_PASSWORD, seed_store


def _open_store(config: ServiceConfig) -> Store:
    if config.store_path is None:
        return MemoryStore()
    return SqliteStore(config.store_path)


def _add_config_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", default=None,
                        help="JSON config file; GLUCOLOG_* environment variables override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glucolog",
        description="Self-hosted diabetes self-monitoring service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service and the backup scheduler")
    _add_config_arg(serve)
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)

    backup = sub.add_parser("backup-now", help="write one snapshot archive immediately")
    _add_config_arg(backup)
    backup.add_argument("--dest", metavar="DIR", default=None,
                        help="destination directory (default: configured backup_dir)")

    imp = sub.add_parser("import", help="load CSV files from a directory into the store")
    _add_config_arg(imp)
    imp.add_argument("--dir", metavar="DIR", required=True)

    exp = sub.add_parser("export", help="write the store's contents as CSV files")
    _add_config_arg(exp)
    exp.add_argument("--dir", metavar="DIR", required=True)

    seed = sub.add_parser("seed", help="load the deterministic demo dataset")
    _add_config_arg(seed)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except GlucologError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 2

    if args.command == "serve":
        return _cmd_serve(args, config)

    store = _open_store(config)
    try:
        if args.command == "backup-now":
            return _cmd_backup_now(args, config, store)
        if args.command == "import":
            return _cmd_import(args, store)
        if args.command == "export":
            return _cmd_export(args, store)
        if args.command == "seed":
            return _cmd_seed(store)
        raise AssertionError(f"unhandled command {args.command}")
    except GlucologError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 2
    finally:
        store.close()


def _cmd_serve(args, config: ServiceConfig) -> int:
    import uvicorn

    host = args.host if args.host is not None else config.host
    port = args.port if args.port is not None else config.port
    store = _open_store(config)
    app = create_app(store, config)
    scheduler = BackupScheduler(
        store, config.backup_dir, interval_s=config.backup_interval_s)
    scheduler.start()
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    finally:
        scheduler.stop()
        store.close()
    return 0


def _cmd_backup_now(args, config: ServiceConfig, store: Store) -> int:
    dest_dir = args.dest if args.dest is not None else config.backup_dir
    os.makedirs(dest_dir, exist_ok=True)
    now = int(time.time())
    destination = os.path.join(dest_dir, archive_name(now))
    manifest = backup_snapshot(store, destination, created_at=now)
    total = sum(manifest.record_counts.values())
    print(f"wrote {destination} ({total} rows, {manifest.checksum})")
    return 0


def _cmd_import(args, store: Store) -> int:
    loaded = import_csv(store, args.dir)
    for filename, n in sorted(loaded.items()):
        print(f"{filename}: {n} rows")
    return 0


def _cmd_export(args, store: Store) -> int:
    written = export_csv(store, args.dir)
    for filename, n in sorted(written.items()):
        print(f"{filename}: {n} rows")
    return 0


def _cmd_seed(store: Store) -> int:
    accounts = seed_store(store)
    print(f"seeded demo data; password for all accounts: {SEED_PASSWORD}")
    for uid, email in sorted(accounts.items()):
        print(f"  {uid}: {email}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
