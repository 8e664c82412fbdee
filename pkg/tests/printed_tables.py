"""Reference weight tables transcribed cell-for-cell from print,
misprints included. Keys are author counts; values are the printed cells."""

TYPE1 = {
    1: "1",
    2: "2/3 1/3",
    3: "3/6 2/6 1/6",
    4: "4/10 3/10 2/10 1/10",
    5: "5/15 4/15 3/15 2/15 1/15",
    6: "6/21 5/21 4/21 3/21 2/21 1/21",
    7: "7/28 6/28 5/28 4/28 3/28 2/28 1/28",
    8: "8/36 7/36 6/36 5/36 4/36 3/36 2/36 1/36",
    9: "9/45 8/45 7/45 6/45 5/45 4/45 3/45 2/45 1/45",
    10: "10/55 9/55 8/55 7/55 6/55 5/55 4/55 3/55 2/55 1/55",
}

GEOMETRIC = {
    1: "1",
    2: "2/3 1/3",
    3: "4/7 2/7 1/7",
    4: "8/15 4/15 2/15 1/15",
    5: "16/31 8/31 4/31 2/31 1/31",
    6: "32/63 16/63 8/63 4/63 2/63 1/21",
    7: "64/127 32/127 16/127 8/127 4/127 2/127 1/127",
    8: "128/255 64/255 32/255 16/255 8/255 4/255 2/255 1/255",
    9: "256/511 128/511 64/511 32/511 16/511 8/511 4/511 2/511 1/511",
    10: "512/1023 256/1023 128/1023 64/1023 32/1023 16/1023 8/1023 4/1023 2/1023 1/1023",
}

HARMONIC = {
    1: "1",
    2: "2/3 1/3",
    3: "6/11 3/11 2/11",
    4: "12/25 6/25 4/25 3/25",
    5: "60/137 30/137 20/137 15/137 12/137",
    6: "60/147 30/147 20/147 15/147 12/147 10/147",
    7: "420/1089 210/1089 140/1089 105/1089 84/1089 70/1089 60/1089",
    8: "840/2283 420/2283 280/2283 210/2283 168/2283 140/2283 120/2283 105/2283",
    9: "2520/7129 1260/7129 840/7129 630/7129 504/7129 420/7129 360/7129 315/7129 280/7129",
    10: "2520/7379 1260/7379 840/7379 630/7379 504/7379 420/7379 360/7379 315/7379 280/7379 252/7379",
}

# The one misprint the build contract sanctions: geometric k=6, w6 is
# printed 1/21, but 2^0/(2^6 - 1) = 1/63.
GEOMETRIC_CORRECTIONS = {(6, 6): "1/63"}


def cells(table: dict, k: int) -> list[str]:
    return table[k].split()


def as_csv(table: dict, max_k: int = 10, corrections: dict | None = None) -> str:
    corrections = corrections or {}
    lines = ["authors," + ",".join(f"w{j}" for j in range(1, max_k + 1))]
    for k in range(1, max_k + 1):
        row = cells(table, k)
        row = [corrections.get((k, j), c) for j, c in enumerate(row, start=1)]
        lines.append(",".join([str(k), *row, *([""] * (max_k - k))]))
    return "\n".join(lines) + "\n"
