"""Command-line client for the evaluation service.

By default each invocation serves requests in-process (no network); pass
--server URL to talk to a running instance instead.  Complex numbers are
written "re,im" everywhere; grids and curves stream as CSV rows headed
by re,im,<fields>; every subcommand also has a --json mode.
"""

import json
import sys

import click

from .connection import DEFAULT_RHO
from .domains import DEFAULT_BOUNDARY_BAND


def _parse_complex(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise click.UsageError(f"complex values are written re,im — got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise click.UsageError(f"bad complex literal {text!r}: {exc}") from exc


def _fmt_complex(re: float, im: float) -> str:
    return f"{re!r},{im!r}"


class Client:
    """POSTs either in-process (default) or to a remote server."""

    def __init__(self, server: str | None):
        self.server = server
        if server is None:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)
        else:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=120.0)

    def post(self, path: str, payload: dict):
        resp = self._client.post(path, json=payload)
        if resp.status_code >= 400:
            try:
                body = resp.json()
                message = f"{body.get('error', 'error')}: {body.get('detail', '')}"
            except Exception:
                message = resp.text
            click.echo(message, err=True)
            sys.exit(1)
        return resp

    def post_stream(self, path: str, payload: dict):
        """Yield ndjson rows from a streaming endpoint."""
        if self.server is None:
            resp = self.post(path, payload)
            for line in resp.text.splitlines():
                if line.strip():
                    yield json.loads(line)
        else:
            with self._client.stream("POST", path, json=payload) as resp:
                if resp.status_code >= 400:
                    resp.read()
                    click.echo(resp.text, err=True)
                    sys.exit(1)
                for line in resp.iter_lines():
                    if line.strip():
                        yield json.loads(line)


def _emit(data: dict, as_json: bool, complex_pairs=()):
    """Print one result: a JSON object or key=value lines, with the listed
    (re-field, im-field, name) triples folded into re,im complex values."""
    if as_json:
        click.echo(json.dumps(data))
        return
    folded = set()
    for re_key, im_key, name in complex_pairs:
        click.echo(f"{name}={_fmt_complex(data[re_key], data[im_key])}")
        folded.update((re_key, im_key))
    for key, value in data.items():
        if key not in folded:
            click.echo(f"{key}={value}")


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Evaluate Gauss hypergeometric families and their recurrences."""
    ctx.obj = Client(server)


@main.command("eval")
@click.option("--a", required=True, metavar="RE,IM", help="parameter a")
@click.option("--b", required=True, metavar="RE,IM", help="parameter b")
@click.option("--c", required=True, metavar="RE,IM", help="parameter c")
@click.option("--z", required=True, metavar="RE,IM", help="argument z")
@click.option("--rho", default=DEFAULT_RHO, show_default=True,
              help="series convergence radius for transform selection")
@click.option("--json", "as_json", is_flag=True, help="emit one JSON object")
@click.pass_obj
def eval_cmd(client, a, b, c, z, rho, as_json):
    """Evaluate F(a, b; c; z)."""
    a_re, a_im = _parse_complex(a)
    b_re, b_im = _parse_complex(b)
    c_re, c_im = _parse_complex(c)
    z_re, z_im = _parse_complex(z)
    resp = client.post("/eval", {
        "a_re": a_re, "a_im": a_im, "b_re": b_re, "b_im": b_im,
        "c_re": c_re, "c_im": c_im, "z_re": z_re, "z_im": z_im, "rho": rho,
    })
    _emit(resp.json(), as_json, [("value_re", "value_im", "value")])


@main.command("roots")
@click.option("--form", required=True, type=int, help="basic form id (2,3,5,6,13)")
@click.option("--z", required=True, metavar="RE,IM")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def roots_cmd(client, form, z, as_json):
    """Characteristic roots t1, t2 and coefficient limits at z."""
    z_re, z_im = _parse_complex(z)
    resp = client.post("/roots", {"form": form, "z_re": z_re, "z_im": z_im})
    _emit(resp.json(), as_json, [
        ("t1_re", "t1_im", "t1"),
        ("t2_re", "t2_im", "t2"),
        ("alpha_re", "alpha_im", "alpha"),
        ("beta_re", "beta_im", "beta"),
    ])


@main.command("classify")
@click.option("--form", required=True, type=int)
@click.option("--z", required=True, metavar="RE,IM")
@click.option("--direction", default="forward", show_default=True,
              type=click.Choice(["forward", "backward"]))
@click.option("--boundary-band", default=DEFAULT_BOUNDARY_BAND, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def classify_cmd(client, form, z, direction, boundary_band, as_json):
    """Which labeled solution is minimal/dominant at z."""
    z_re, z_im = _parse_complex(z)
    resp = client.post("/classify", {
        "form": form, "z_re": z_re, "z_im": z_im,
        "direction": direction, "boundary_band": boundary_band,
    })
    _emit(resp.json(), as_json)


@main.command("coeffs")
@click.option("--form", required=True, type=int)
@click.option("--a", required=True, metavar="RE,IM")
@click.option("--b", required=True, metavar="RE,IM")
@click.option("--c", required=True, metavar="RE,IM")
@click.option("--z", required=True, metavar="RE,IM")
@click.option("--n", required=True, type=int)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def coeffs_cmd(client, form, a, b, c, z, n, as_json):
    """Recurrence coefficients A_n, B_n, C_n."""
    a_re, a_im = _parse_complex(a)
    b_re, b_im = _parse_complex(b)
    c_re, c_im = _parse_complex(c)
    z_re, z_im = _parse_complex(z)
    resp = client.post("/coeffs", {
        "form": form, "a_re": a_re, "a_im": a_im, "b_re": b_re, "b_im": b_im,
        "c_re": c_re, "c_im": c_im, "z_re": z_re, "z_im": z_im, "n": n,
    })
    _emit(resp.json(), as_json, [
        ("A_re", "A_im", "A"), ("B_re", "B_im", "B"), ("C_re", "C_im", "C"),
    ])


@main.command("recurse")
@click.option("--form", required=True, type=int)
@click.option("--a", required=True, metavar="RE,IM")
@click.option("--b", required=True, metavar="RE,IM")
@click.option("--c", required=True, metavar="RE,IM")
@click.option("--z", required=True, metavar="RE,IM")
@click.option("--n-from", required=True, type=int)
@click.option("--n-to", required=True, type=int)
@click.option("--seed0", required=True, metavar="RE,IM", help="y at n-from")
@click.option("--seed1", required=True, metavar="RE,IM",
              help="y at the next index toward n-to")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def recurse_cmd(client, form, a, b, c, z, n_from, n_to, seed0, seed1, as_json):
    """Run a basic-form recurrence; rows are n, mantissa, exponent."""
    a_re, a_im = _parse_complex(a)
    b_re, b_im = _parse_complex(b)
    c_re, c_im = _parse_complex(c)
    z_re, z_im = _parse_complex(z)
    s0_re, s0_im = _parse_complex(seed0)
    s1_re, s1_im = _parse_complex(seed1)
    resp = client.post("/recurse", {
        "form": form, "a_re": a_re, "a_im": a_im, "b_re": b_re, "b_im": b_im,
        "c_re": c_re, "c_im": c_im, "z_re": z_re, "z_im": z_im,
        "n_from": n_from, "n_to": n_to,
        "seed0_re": s0_re, "seed0_im": s0_im,
        "seed1_re": s1_re, "seed1_im": s1_im,
    })
    body = resp.json()
    if as_json:
        click.echo(json.dumps(body))
        return
    click.echo(f"direction={body['direction']}")
    click.echo("n,mantissa_re,mantissa_im,exponent")
    for row in body["values"]:
        click.echo(
            f"{row['n']},{row['mantissa_re']!r},{row['mantissa_im']!r},{row['exponent']}"
        )


@main.command("boundary")
@click.option("--form", required=True, type=int)
@click.option("--samples", default=64, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def boundary_cmd(client, form, samples, as_json):
    """Trace the |t1|=|t2| curve; CSV rows re,im,defect."""
    resp = client.post("/boundary", {"form": form, "samples": samples})
    body = resp.json()
    if as_json:
        click.echo(json.dumps(body))
        return
    click.echo("re,im,defect")
    for pt in body["points"]:
        click.echo(f"{pt['re']!r},{pt['im']!r},{pt['defect']!r}")


@main.command("region-grid")
@click.option("--form", required=True, type=int)
@click.option("--window", required=True, metavar="XMIN,XMAX,YMIN,YMAX",
              help="rectangle in the z-plane")
@click.option("--step", required=True, type=float)
@click.option("--direction", default="forward", show_default=True,
              type=click.Choice(["forward", "backward"]))
@click.option("--boundary-band", default=DEFAULT_BOUNDARY_BAND, show_default=True)
@click.option("--json", "as_json", is_flag=True,
              help="stream one JSON object per node instead of CSV")
@click.pass_obj
def region_grid_cmd(client, form, window, step, direction, boundary_band, as_json):
    """Classify a grid of z values; CSV rows stream row-major
    (imaginary part ascending, then real part)."""
    parts = window.split(",")
    if len(parts) != 4:
        raise click.UsageError("window is written xmin,xmax,ymin,ymax")
    try:
        re_min, re_max, im_min, im_max = (float(x) for x in parts)
    except ValueError as exc:
        raise click.UsageError(f"bad window {window!r}: {exc}") from exc
    payload = {
        "form": form, "re_min": re_min, "re_max": re_max,
        "im_min": im_min, "im_max": im_max, "step": step,
        "direction": direction, "boundary_band": boundary_band,
    }
    rows = client.post_stream("/region-grid", payload)
    if as_json:
        for row in rows:
            click.echo(json.dumps(row))
        return
    click.echo("re,im,status,relation,minimal,dominant,no_minimal_pair")
    for row in rows:
        click.echo(
            f"{row['re']!r},{row['im']!r},{row['status']},"
            f"{row['relation'] or ''},{row['minimal'] or ''},"
            f"{row['dominant'] or ''},{str(row['no_minimal_pair']).lower()}"
        )


@main.command("advise")
@click.option("--shift", required=True, metavar="E1,E2,E3",
              help="shift vector, entries in {-1,0,1}")
@click.option("--z", required=True, metavar="RE,IM")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def advise_cmd(client, shift, z, as_json):
    """Stable recursion direction for a shift vector at z."""
    parts = shift.split(",")
    if len(parts) != 3:
        raise click.UsageError("shift is written e1,e2,e3")
    try:
        e1, e2, e3 = (int(x) for x in parts)
    except ValueError as exc:
        raise click.UsageError(f"bad shift {shift!r}: {exc}") from exc
    z_re, z_im = _parse_complex(z)
    resp = client.post("/advise", {
        "e1": e1, "e2": e2, "e3": e3, "z_re": z_re, "z_im": z_im,
    })
    _emit(resp.json(), as_json)


if __name__ == "__main__":
    main()
