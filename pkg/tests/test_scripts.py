import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_twisted_products_script():
    res = subprocess.run(
        [sys.executable, str(SCRIPTS / "twisted_products.py"), "--range", "1"],
        capture_output=True, text=True, check=True,
    )
    rows = res.stdout.strip().splitlines()[1:]
    assert len(rows) == 9 and all(r.endswith("agree") for r in rows)


def test_l_genus_script():
    res = subprocess.run(
        [sys.executable, str(SCRIPTS / "l_genus_table.py"), "3"],
        capture_output=True, text=True, check=True,
    )
    assert "L_2 = 7/45*p[2] - 1/45*p[1.1]" in res.stdout
