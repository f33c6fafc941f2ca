#!/usr/bin/env python3
"""Compute a noisy real disparity map for the asset-gated acceptance check.

Runs OpenCV semi-global block matching on the rectified Middlebury 2014
motorcycle pair bundled with scikit-image and writes an 8-bit PGM where
unmatched pixels are 0.
"""
import argparse
import pathlib

import cv2
import numpy as np
from skimage import data


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=pathlib.Path,
        default=pathlib.Path(__file__).resolve().parent.parent / "assets" / "real_disparity.pgm",
    )
    args = parser.parse_args()

    left, right, _ = data.stereo_motorcycle()
    left = cv2.cvtColor(left, cv2.COLOR_RGB2GRAY)
    right = cv2.cvtColor(right, cv2.COLOR_RGB2GRAY)

    block = 5
    matcher = cv2.StereoSGBM_create(
        minDisparity=0,
        numDisparities=96,
        blockSize=block,
        P1=8 * block * block,
        P2=32 * block * block,
        uniquenessRatio=10,
        speckleWindowSize=100,
        speckleRange=2,
    )
    disparity = matcher.compute(left, right).astype(np.float32) / 16.0
    disparity[disparity < 0] = 0
    disparity = np.clip(np.rint(disparity), 0, 255).astype(np.uint8)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    height, width = disparity.shape
    with open(args.out, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(disparity.tobytes())
    print(f"{args.out}: {width}x{height}, disparity range {disparity.min()}..{disparity.max()}")


if __name__ == "__main__":
    main()
