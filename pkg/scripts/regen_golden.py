"""Regenerate tests/golden/*.{txt,json} from the current CLI output.

Only run this after checking the new numbers by hand.
"""
import contextlib
import io
from pathlib import Path

from incompress.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = {
    "chi_k3": ["chi", "--ambient", "3", "--degrees", "4"],
    "chi_plane_cubic": ["chi", "--ambient", "2", "--degrees", "3"],
    "chi_p5": ["chi", "--ambient", "5"],
    "tau_4": ["tau", "4"],
    "charnum_conic": ["charnum", "--ambient", "2", "--degrees", "2", "--partition", "1"],
    "charnum_2_3_in_p6": ["charnum", "--ambient", "6", "--degrees", "2,3", "--partition", "1,3"],
    "report_conic": ["report", "--ambient", "2", "--degrees", "2", "--nx", "2"],
    "report_k3": ["report", "--ambient", "3", "--degrees", "4", "--nx", "4"],
    "report_quintic_4fold": ["report", "--ambient", "5", "--degrees", "5", "--nx", "5"],
    "degform_violated": ["degform", "--chi-y", "0", "--dim-y", "1", "--chi-x", "1",
                         "--deg-f", "1", "--nx", "3"],
}


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    assert code == 0, (argv, code)
    return buf.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        (GOLDEN / f"{name}.txt").write_text(run(argv))
        (GOLDEN / f"{name}.json").write_text(run(["--format", "json"] + argv))
        print("wrote", name)
