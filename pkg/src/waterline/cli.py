"""Command-line interface.

Both ``extract`` and ``compare`` are thin clients over the HTTP service:
they post the input files to the service (an in-process instance by
default, or a remote one via ``--server``) and write the returned files to
the output directory. ``serve`` runs the service itself.
"""

from __future__ import annotations

import base64
from pathlib import Path

import click

from . import __version__
from .pipeline import parse_config_file

_OPERATORS = ("sobel", "roberts", "prewitt")
_AREA_MODES = ("faithful", "corrected")
_MORPH_ORDERS = ("dilate_first", "erode_first")


class ServiceClient:
    """POSTs either to an in-process app or to a remote server."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=120.0)
        else:
            from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, url: str, **kwargs):
        return self._client.post(url, **kwargs)

    def close(self) -> None:
        self._client.close()


def _load_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.ClickException(f"cannot read config file: {exc}") from exc
    try:
        return parse_config_file(text)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


def _merge(config: dict[str, str], **flags) -> dict:
    """Config-file values overridden by any flag that was actually given."""
    merged: dict = dict(config)
    for key, value in flags.items():
        if value is not None:
            merged[key] = value
    return merged


def _require(merged: dict, *keys: str) -> None:
    missing = [k for k in keys if not merged.get(k)]
    if missing:
        flags = ", ".join("--" + k.replace("_", "-") for k in missing)
        raise click.UsageError(f"missing required option(s): {flags}")


def _error_detail(resp) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        return resp.text
    if isinstance(detail, list):  # FastAPI validation errors
        return "; ".join(str(item.get("msg", item)) for item in detail)
    return str(detail)


def _post_files(client: ServiceClient, url: str, file_paths: dict[str, str], data: dict):
    handles = []
    try:
        files = {}
        for field, path in file_paths.items():
            try:
                handle = open(path, "rb")
            except OSError as exc:
                raise click.ClickException(f"cannot read --{field}: {exc}") from exc
            handles.append(handle)
            files[field] = (Path(path).name, handle, "application/octet-stream")
        return client.post(url, files=files, data=data)
    finally:
        for handle in handles:
            handle.close()


def _write_outputs(out_dir: str, files: dict[str, str], rasters: dict[str, str]) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text, encoding="utf-8", newline="\n")
    for name, encoded in rasters.items():
        (out / f"{name}.png").write_bytes(base64.b64decode(encoded))
    return out


@click.group()
@click.version_option(version=__version__)
def main() -> None:
    """Extract water-body boundaries from map rasters as GPS contours."""


@main.command()
@click.option("--image", "image", type=str, default=None, help="Input map raster.")
@click.option("--binding", "binding", type=str, default=None, help="Control-point binding file.")
@click.option("--out", "out", type=str, default=None, help="Output directory.")
@click.option("--operator", type=click.Choice(_OPERATORS), default=None, help="Gradient operator (default sobel).")
@click.option("--hsv", type=str, default=None, metavar="H_LO,H_HI,S_LO,S_HI,V_LO,V_HI", help="Water HSV ranges as six fractions in [0,1].")
@click.option("--se", type=int, default=None, help="Structuring-element size (odd, default 3).")
@click.option("--min-area", "min_area", type=int, default=None, help="Minimum region area in px (default 50).")
@click.option("--area-mode", "area_mode", type=click.Choice(_AREA_MODES), default=None, help="Kilometer conversion mode (default corrected).")
@click.option("--edge-threshold", "edge_threshold", type=float, default=None, help="Gradient magnitude threshold (default 0).")
@click.option("--morph-order", "morph_order", type=click.Choice(_MORPH_ORDERS), default=None, help="Cleanup order (default dilate_first).")
@click.option("--diagnostics/--no-diagnostics", "diagnostics", default=None, help="Also write mask/edge rasters.")
@click.option("--config", "config_path", type=str, default=None, help="key=value config file; flags override it.")
@click.option("--server", type=str, default=None, help="Remote service URL (default: run in-process).")
def extract(image, binding, out, operator, hsv, se, min_area, area_mode,
            edge_threshold, morph_order, diagnostics, config_path, server):
    """Run the full pipeline and write regions.csv, contours.csv, contours.txt."""
    merged = _merge(
        _load_config(config_path),
        image=image, binding=binding, out=out, operator=operator, hsv=hsv,
        se=se, min_area=min_area, area_mode=area_mode,
        edge_threshold=edge_threshold, morph_order=morph_order,
        diagnostics=diagnostics, server=server,
    )
    _require(merged, "image", "binding", "out")

    data = {}
    for key in ("operator", "hsv", "se", "min_area", "area_mode",
                "edge_threshold", "morph_order", "diagnostics"):
        if merged.get(key) is not None:
            data[key] = str(merged[key])

    client = ServiceClient(merged.get("server"))
    try:
        resp = _post_files(
            client, "/extract",
            {"image": str(merged["image"]), "binding": str(merged["binding"])},
            data,
        )
    finally:
        client.close()

    if resp.status_code != 200:
        raise click.ClickException(f"extraction failed: {_error_detail(resp)}")

    payload = resp.json()
    out_path = _write_outputs(str(merged["out"]), payload["files"], payload.get("diagnostics", {}))
    if payload["no_regions_found"]:
        click.echo(f"No water regions found; wrote empty outputs to {out_path}")
    else:
        click.echo(f"Extracted {len(payload['regions'])} region(s); outputs in {out_path}")


@main.command()
@click.option("--image", "image", type=str, default=None, help="Input map raster.")
@click.option("--out", "out", type=str, default=None, help="Output directory.")
@click.option("--hsv", type=str, default=None, metavar="H_LO,H_HI,S_LO,S_HI,V_LO,V_HI", help="Water HSV ranges as six fractions in [0,1].")
@click.option("--se", type=int, default=None, help="Structuring-element size (odd, default 3).")
@click.option("--min-area", "min_area", type=int, default=None, help="Minimum region area in px (default 50).")
@click.option("--morph-order", "morph_order", type=click.Choice(_MORPH_ORDERS), default=None, help="Cleanup order (default dilate_first).")
@click.option("--config", "config_path", type=str, default=None, help="key=value config file; flags override it.")
@click.option("--server", type=str, default=None, help="Remote service URL (default: run in-process).")
def compare(image, out, hsv, se, min_area, morph_order, config_path, server):
    """Compare Sobel/Roberts/Prewitt on one image; write table + edge rasters."""
    merged = _merge(
        _load_config(config_path),
        image=image, out=out, hsv=hsv, se=se, min_area=min_area,
        morph_order=morph_order, server=server,
    )
    _require(merged, "image", "out")

    data = {}
    for key in ("hsv", "se", "min_area", "morph_order"):
        if merged.get(key) is not None:
            data[key] = str(merged[key])

    client = ServiceClient(merged.get("server"))
    try:
        resp = _post_files(client, "/compare", {"image": str(merged["image"])}, data)
    finally:
        client.close()

    if resp.status_code != 200:
        raise click.ClickException(f"comparison failed: {_error_detail(resp)}")

    payload = resp.json()
    out_path = _write_outputs(
        str(merged["out"]), {"comparison.csv": payload["table"]}, payload["rasters"]
    )
    for stats in payload["operators"]:
        click.echo(
            f"{stats['operator']}: {stats['edge_pixels']} edge px, "
            f"peak |gx| {stats['peak_abs_gx']}, peak |gy| {stats['peak_abs_gy']}"
        )
    click.echo(f"Comparison written to {out_path}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True, help="Bind address.")
@click.option("--port", default=8000, show_default=True, type=int, help="Bind port.")
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("waterline.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
