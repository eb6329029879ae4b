"""Columns of the table of term counts and typable-term counts, n = 0..46.

None marks values that were never computed.
"""

CLOSED_COUNTS = [
    0, 0, 0, 0, 1, 0, 1, 1,
    2, 1, 6, 5, 13, 14, 37, 44,
    101, 134, 298, 431, 883, 1361, 2736, 4405,
    8574, 14334, 27465, 47146, 89270, 156360, 293840, 522913,
    978447, 1761907, 3288605, 5977863, 11148652, 20414058, 38071898, 70125402,
    130880047, 242222714, 452574468, 840914719, 1573331752, 2933097201, 5495929096,
]

CLOSED_TYPABLE = [
    0, 0, 0, 0, 1, 0, 1, 1,
    1, 1, 5, 4, 9, 13, 23, 29,
    67, 94, 179, 285, 503, 795, 1503, 2469,
    4457, 7624, 13475, 23027, 41437, 72165, 128905, 227510,
    405301, 715078, 1280127, 2279393, 4086591, 7316698, 13139958, 23551957,
    42383667, 76278547, 137609116, 248447221, 449201368, 812315229, 1470997501,
]

ALL_COUNTS = [
    0, 0, 1, 1, 2, 2, 4, 5,
    10, 14, 27, 41, 78, 126, 237, 399,
    745, 1292, 2404, 4259, 7915, 14242, 26477, 48197,
    89721, 164766, 307294, 568191, 1061969, 1974266, 3698247, 6905523,
    12964449, 24295796, 45711211, 85926575, 161996298, 305314162, 576707409, 1089395667,
    2061428697, 3901829718, 7395529009, 14023075765, 26620080576, 50556677634, 96108150292,
]

ALL_TYPABLE = [
    0, 0, 1, 1, 2, 2, 3, 5,
    8, 13, 22, 36, 58, 103, 177, 307,
    535, 949, 1645, 2936, 5207, 9330, 16613, 29921,
    53588, 96808, 174443, 316267, 572092, 1040596, 1888505, 3441755,
    6268500, 11449522, 20902152, 38256759, 70004696, 128336318, 235302612, 432050796,
    793513690, 1459062947, 2683714350, None, None, None, None,
]
