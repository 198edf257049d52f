#!/usr/bin/env python3
# Copyright 2026 The evtail Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fetch the Danish fire insurance losses (1980-1990, millions of DKK).

The copy shipped with the R package evir (as packaged by the `rdatasets`
wheel) has 2167 rows; 11 of them are exactly 1.0. The 2156 losses over one
million are kept and checked by count and sum before data/danish.txt is
written.
"""

import argparse
import io
import lzma
import math
import pathlib
import pickle
import subprocess
import sys
import tempfile
import zipfile

EXPECTED_COUNT = 2156
EXPECTED_SUM = 7324.486380366
MEMBER = "rdatasets/_data/evir/danish.pkl.compress"


def load_wheel(path):
    with zipfile.ZipFile(path) as zf:
        raw = lzma.decompress(zf.read(MEMBER))
    frame = pickle.load(io.BytesIO(raw))
    return [float(v) for v in frame["dat"]]


def download_wheel(dest):
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "--only-binary", ":all:",
         "-d", str(dest), "rdatasets==0.2.10"],
        check=True)
    wheels = sorted(pathlib.Path(dest).glob("rdatasets-*.whl"))
    if not wheels:
        sys.exit("pip download produced no rdatasets wheel")
    return wheels[0]


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--wheel", help="use an already downloaded rdatasets wheel")
    parser.add_argument("--output", default=str(root / "data" / "danish.txt"))
    args = parser.parse_args()

    if args.wheel:
        values = load_wheel(args.wheel)
    else:
        with tempfile.TemporaryDirectory() as tmp:
            values = load_wheel(download_wheel(tmp))

    losses = [v for v in values if v > 1.0]
    total = math.fsum(losses)
    if len(losses) != EXPECTED_COUNT or abs(total - EXPECTED_SUM) > 1e-6:
        sys.exit(f"checksum mismatch: n={len(losses)} sum={total:.9f}, "
                 f"expected n={EXPECTED_COUNT} sum={EXPECTED_SUM}")

    out = pathlib.Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("".join(f"{v!r}\n" for v in losses))
    print(f"wrote {len(losses)} values (sum {total:.9f}) to {out}")


if __name__ == "__main__":
    main()
