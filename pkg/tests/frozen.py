"""Frozen oracle constants.

Every value here was produced by a 60-digit mpmath evaluation and rounded
to the nearest binary64; test_frozen.py re-derives each one and fails if a
literal drifts.  Package code must never import this module.
"""

# plain inverse-function values
ACOSH_2 = 1.3169578969248168
ACOSH_3 = 1.762747174039086
ACOSH_6 = 2.477888730288475
ASINH_1 = 0.881373587019543
ASINH_2 = 1.4436354751788103
ATANH_HALF = 0.5493061443340549

# equality-case anchors
FOUR_LN3 = 4.394449154672439
EIGHT_LN3 = 8.788898309344878
TWELVE_LN_SILVER = 10.576483044234516
TWENTYFOUR_LN_SILVER = 21.152966088469032
FOUR_PI = 12.566370614359172
EIGHT_PI = 25.132741228718345

# largest finite-vertex inradius asinh(cot(pi/n)); equals acosh(1/sin(pi/n))
RMAX_3 = 0.5493061443340549
RMAX_4 = 0.881373587019543
RMAX_6 = 1.3169578969248168
RMAX_12 = 2.027589421800132

# circumradius where acot(tan(pi/n) cosh R) inflects: acosh(sqrt(2 + cot^2(pi/n)))
THM7_STAR_4 = 1.1462158347805889
THM7_STAR_6 = 1.4436354751788103
THM7_STAR_12 = 2.0611144490883837

# per-polygon admissibility thresholds
THM9_AREA_THR_4 = 1.7083143455699046
THM9_AREA_THR_6 = 3.141592653589793
THM9_THETA_THR_4 = 1.1437177404024206
THM9_THETA_THR_6 = 1.5707963267948966
THM10_PERI_THR_4 = 6.114283677923993
THM10_PERI_THR_6 = 7.9017473815489

# regular hexagon with circumradius asinh 2
HEX_R_ASINH2_r = 1.0317185344477802
HEX_R_ASINH2_theta = 1.318116071652818
HEX_R_ASINH2_area = 4.657674184442265

# regular hexagon with interior angle 1
HEX_THETA1_PERI = 14.36596359753766
HEX_THETA1_AREA = 6.566370614359173

# right triangle with legs b = 5/4, c = 3/4
TRI_A = 1.5424348990547427
TRI_B = 0.80094037059891
TRI_C = 0.3774790456641362

# log-space hypotenuse branch
HYP_25_25 = 49.30685281944005
HYP_300_250 = 549.3068528194401

# printed inradius expression vs the tanh r = cos(pi/n) tanh R reference, n=6, R=1
COR1_6_1 = 1.0852623510847577
REF_R_6_1 = 0.7920342426699567

# chord between point_at(0.8, 0) and point_at(0.8, 1.1)
CHORD_08_11 = 0.897931746914749

# spot values of the closed forms at n=6, R=1
THM2_6_1 = 6.697961514139274
THM4_6_1 = 2.4499774582252702

# sector-function anchor: asinh(sin(pi/6) sinh(asinh 2))
CHS_PI3_ASINH2 = 0.881373587019543
