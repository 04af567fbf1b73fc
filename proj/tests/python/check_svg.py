"""Parses `chromo svg` output with a real XML parser and checks the element inventory."""

import os
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET

NS = "{http://www.w3.org/2000/svg}"


def main(cli: str) -> int:
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "figure.svg")
        subprocess.run([cli, "svg", "--points", "0,0;6,1;2,3", "--out", out], check=True)
        root = ET.parse(out).getroot()
    assert root.tag == NS + "svg", root.tag
    assert root.get("width") == "800"
    classes = [e.get("class") for e in root.iter() if e.get("class")]
    for colour in ("blue", "red", "green"):
        for kind in ("euler", "circumcircle", "nine-point"):
            assert classes.count(f"{kind} {colour}") == 1, (kind, colour)
    assert classes.count("center") == 10
    labels = {e.text for e in root.iter(NS + "text")}
    for name in ("O_b", "C_b", "N_b", "O_r", "C_r", "N_r", "O_g", "C_g", "N_g", "G"):
        assert name in labels, name
    print("svg ok:", len(list(root.iter())), "elements")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
