"""FastAPI wrapper around the extraction pipeline.

Uploads are staged into a temporary directory and fed through the same
PipelineConfig/run_pipeline path the library exposes, so service and direct
library use cannot drift apart. Rendered output files come back in the JSON
response body; the CLI writes them to disk unchanged.
"""

from __future__ import annotations

import base64
import tempfile
from pathlib import Path

from fastapi import FastAPI, File, Form, HTTPException, UploadFile

from .. import __version__
from ..errors import WaterlineError
from ..pipeline import (
    PipelineConfig,
    render_comparison,
    render_outputs,
    run_compare,
    run_pipeline,
)
from ..raster import mask_to_png_bytes
from .schemas import (
    CompareResponse,
    ExtractOptions,
    ExtractResponse,
    HealthResponse,
    OperatorStatsModel,
    RegionModel,
)


def _b64(mask) -> str:
    return base64.b64encode(mask_to_png_bytes(mask)).decode("ascii")


def _suffix(upload: UploadFile, fallback: str) -> str:
    name = upload.filename or ""
    return Path(name).suffix or fallback


def create_app() -> FastAPI:
    app = FastAPI(title="waterline", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/extract", response_model=ExtractResponse)
    def extract(
        image: UploadFile = File(...),
        binding: UploadFile = File(...),
        operator: str = Form("sobel"),
        hsv: str | None = Form(None),
        se: int = Form(3),
        min_area: int = Form(50),
        area_mode: str = Form("corrected"),
        edge_threshold: float = Form(0.0),
        morph_order: str = Form("dilate_first"),
        diagnostics: bool = Form(False),
    ) -> ExtractResponse:
        try:
            options = ExtractOptions(
                operator=operator,
                hsv=hsv,
                se=se,
                min_area=min_area,
                area_mode=area_mode,
                edge_threshold=edge_threshold,
                morph_order=morph_order,
                diagnostics=diagnostics,
            )
            hsv_range = options.hsv_range()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

        with tempfile.TemporaryDirectory() as workdir:
            image_path = Path(workdir) / f"image{_suffix(image, '.png')}"
            image_path.write_bytes(image.file.read())
            binding_path = Path(workdir) / "binding.txt"
            binding_path.write_bytes(binding.file.read())

            try:
                cfg_kwargs = dict(
                    image_path=str(image_path),
                    binding_path=str(binding_path),
                    output_dir=workdir,
                    se_size=options.se,
                    morph_order=options.morph_order,
                    min_area=options.min_area,
                    operator=options.operator,
                    edge_threshold=options.edge_threshold,
                    area_mode=options.area_mode,
                    emit_diagnostics=options.diagnostics,
                )
                if hsv_range is not None:
                    cfg_kwargs["hsv_range"] = hsv_range
                report = run_pipeline(PipelineConfig(**cfg_kwargs))
            except WaterlineError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
            except ValueError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc

        return ExtractResponse(
            regions=[
                RegionModel(
                    region_id=r.region_id,
                    area_px=r.area_px,
                    perimeter_px=r.perimeter_px,
                    area_km=r.area_km,
                    perimeter_km=r.perimeter_km,
                    mode=r.conversion_mode.value,
                )
                for r in report.regions
            ],
            no_regions_found=report.no_regions_found,
            stage_timings=report.stage_timings,
            files=render_outputs(report),
            diagnostics={name: _b64(m) for name, m in report.diagnostics.items()},
        )

    @app.post("/compare", response_model=CompareResponse)
    def compare(
        image: UploadFile = File(...),
        hsv: str | None = Form(None),
        se: int = Form(3),
        min_area: int = Form(50),
        morph_order: str = Form("dilate_first"),
    ) -> CompareResponse:
        try:
            options = ExtractOptions(
                hsv=hsv, se=se, min_area=min_area, morph_order=morph_order
            )
            hsv_range = options.hsv_range()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

        with tempfile.TemporaryDirectory() as workdir:
            image_path = Path(workdir) / f"image{_suffix(image, '.png')}"
            image_path.write_bytes(image.file.read())
            try:
                kwargs = dict(
                    se_size=options.se,
                    morph_order=options.morph_order,
                    min_area=options.min_area,
                )
                if hsv_range is not None:
                    kwargs["hsv_range"] = hsv_range
                result = run_compare(image_path, **kwargs)
            except WaterlineError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc

        return CompareResponse(
            operators=[
                OperatorStatsModel(
                    operator=rep.operator.value,
                    edge_pixels=rep.edge_pixels,
                    mean_nonzero_magnitude=rep.mean_nonzero_magnitude,
                    peak_abs_gx=rep.peak_abs_gx,
                    peak_abs_gy=rep.peak_abs_gy,
                )
                for rep in result.reports
            ],
            table=render_comparison(result.reports),
            rasters={
                f"edges_{rep.operator.value}": _b64(rep.edges)
                for rep in result.reports
            },
            stage_timings=result.stage_timings,
        )

    return app


app = create_app()
