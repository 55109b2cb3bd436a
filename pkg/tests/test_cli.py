import json
import socket
import threading
import time

import pytest

from tanglekit.cli import run

UNKNOT_SRC = "tangle 0 0\ncap 1\ncup 1\n"
TREFOIL_SRC = "braid 2: 1 1 1 ; close\n"


@pytest.fixture
def unknot_file(tmp_path):
    p = tmp_path / "unknot.tgl"
    p.write_text(UNKNOT_SRC)
    return str(p)


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.tgl"
    p.write_text(TREFOIL_SRC)
    return str(p)


def test_jones(unknot_file, capsys):
    assert run(["jones", unknot_file]) == 0
    assert capsys.readouterr().out.strip() == "q^-1 + q"


def test_homology_json(trefoil_file, capsys):
    assert run(["homology", trefoil_file, "--json"]) == 0
    dims = json.loads(capsys.readouterr().out)
    assert sum(e["dim"] for e in dims) == 4
    assert dims == sorted(dims, key=lambda e: (e["i"], e["j"]))


def test_homology_standard(trefoil_file, capsys):
    assert run(["homology", trefoil_file, "--standard"]) == 0
    assert "standard Khovanov" in capsys.readouterr().out


def test_reduced(trefoil_file, capsys):
    assert run(["reduced", trefoil_file, "--mark", "1:1"]) == 0
    out = capsys.readouterr().out
    assert "total dimension 3" in out
    assert "PASS" in out


def test_euler(trefoil_file, capsys):
    assert run(["euler", trefoil_file]) == 0
    assert "PASS" in capsys.readouterr().out


def test_skein(trefoil_file, capsys):
    assert run(["skein", trefoil_file, "--crossing", "3"]) == 0
    assert run(["skein", trefoil_file, "--crossing", "4"]) == 2


def test_relcheck_exit_code(capsys):
    assert run(["relcheck", "--max-width", "3"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out


def test_kcheck(capsys):
    assert run(["kcheck", "--max-width", "3", "--shifts"]) == 0
    out = capsys.readouterr().out
    assert "crossing-scalar diagnostic" in out


def test_parse_roundtrip(trefoil_file, capsys):
    assert run(["parse", trefoil_file]) == 0
    out = capsys.readouterr().out
    assert "3 crossings" in out


def test_syntax_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.tgl"
    p.write_text("tangle 0 0\ncros 1 2\n")
    assert run(["jones", str(p)]) == 2
    assert "unknown layer" in capsys.readouterr().err


def test_missing_file_exit_2(capsys):
    assert run(["jones", "/nonexistent/path.tgl"]) == 2


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(UNKNOT_SRC))
    assert run(["jones", "-"]) == 0
    assert capsys.readouterr().out.strip() == "q^-1 + q"


def _free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def live_server():
    import uvicorn

    from tanglekit.service.app import create_app

    port = _free_port()
    config = uvicorn.Config(create_app(), host="127.0.0.1", port=port,
                            log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("service did not start")
        time.sleep(0.05)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5)


def test_remote_dispatch(live_server, unknot_file, capsys):
    assert run(["--server", live_server, "jones", unknot_file]) == 0
    assert capsys.readouterr().out.strip() == "q^-1 + q"


def test_remote_parse_error(live_server, tmp_path, capsys):
    p = tmp_path / "bad.tgl"
    p.write_text("tangle 1 1\ncup 1\n")
    assert run(["--server", live_server, "jones", str(p)]) == 2
