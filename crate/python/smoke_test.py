"""Builds the extension module and exercises it from Python.

Run from the repository root: python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build_module(dest):
    subprocess.run(
        ["cargo", "build", "--release", "-p", "cactus-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    target = os.environ.get("CARGO_TARGET_DIR", os.path.join(ROOT, "target"))
    names = {"linux": "libcactus.so", "darwin": "libcactus.dylib", "win32": "cactus.dll"}
    lib = os.path.join(target, "release", names.get(sys.platform, "libcactus.so"))
    suffix = ".pyd" if sys.platform == "win32" else sysconfig.get_config_var("EXT_SUFFIX")
    shutil.copy(lib, os.path.join(dest, "cactus" + suffix))


def main():
    with tempfile.TemporaryDirectory() as dest:
        build_module(dest)
        sys.path.insert(0, dest)
        import cactus

        pair = cactus.rsk("2113")
        assert pair["p"]["rows"] == [[1, 1, 3], [2]], pair
        assert pair["q"]["rows"] == [[1, 3, 4], [2]], pair
        assert cactus.rsk_inverse(pair["p"], pair["q"], 3) == "2113"

        assert cactus.crystal_e("12", 1) == "11"
        assert cactus.crystal_e("11", 1, 2) is None

        t = {"inner": [], "rows": [[1, 2], [3]]}
        assert cactus.evacuation(t)["rows"] == [[1, 3], [2]]
        assert cactus.act_on_syt(t, [(1, 3)])["rows"] == [[1, 3], [2]]

        assert len(cactus.enumerate_cgds(2, 5)) == 5
        assert len(cactus.enumerate_decgds(2, 5, [[2, 1], [1], [2]])) == 1
        assert cactus.lr_coefficient([3, 3], [[2, 1], [1], [2]]) == 1
        assert cactus.orbits_syt([2, 1])["orbits"] == [[0, 1]]

        report = cactus.check_equivariance([[1], [1], [1]], [2, 1])
        assert report["passed"], report

        spec = cactus.joint_spectrum([0, "1/2", 3], [2, 1])
        assert spec["dimension"] == 2 and spec["simple"], spec
        for row in spec["joint_spectrum"]:
            assert abs(sum(row)) < 1e-9

        try:
            cactus.joint_spectrum([0, 0, 1], [2, 1])
        except ValueError as e:
            assert "repeated" in str(e)
        else:
            raise AssertionError("repeated parameters must raise")

        try:
            cactus.enumerate_cgds(3, 6)
        except ValueError:
            pass
        else:
            raise AssertionError("the default bound must apply")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
