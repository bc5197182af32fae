"""Sine-channel exact solution and its derivatives (generated, do not edit).

Produced by scripts/generate_sine_channel.py with sympy.
"""
from numpy import cos, pi, sin


def u(x, y):
    x0 = pi*x
    return -x**2*(x - 1)**2*(y - 1/20*sin(x0))**2*(sin(5*x)*sin(7*y) + 3)*(-y + (1/20)*sin(3*x0) + 1)**2


def ux(x, y):
    x0 = 20*y
    x1 = pi*x
    x2 = x0 - sin(x1)
    x3 = x - 1
    x4 = 3*x1
    x5 = -x0 + sin(x4) + 20
    x6 = 5*x
    x7 = sin(7*y)
    x8 = x7*sin(x6) + 3
    x9 = x2*x8
    x10 = x*x5
    x11 = 2*x9
    x12 = x3*x5
    return (1/160000)*x10*x2*x3*(2*pi*x*x3*x5*x8*cos(x1) - 6*x1*x3*x9*cos(x4) - x10*x11 - x11*x12 - x12*x2*x6*x7*cos(x6))


def uy(x, y):
    x0 = 20*y
    x1 = pi*x
    x2 = x0 - sin(x1)
    x3 = sin(5*x)
    x4 = 7*y
    x5 = x3*sin(x4) + 3
    x6 = -x0 + sin(3*x1) + 20
    x7 = x2*x6
    return (1/160000)*x**2*x7*(x - 1)**2*(40*x2*x5 - 7*x3*x7*cos(x4) - 40*x5*x6)


def uxx(x, y):
    x0 = x**2
    x1 = 5*x
    x2 = sin(x1)
    x3 = sin(7*y)
    x4 = x2*x3 + 3
    x5 = x0*x4
    x6 = 20*y
    x7 = pi*x
    x8 = sin(x7)
    x9 = x6 - x8
    x10 = x9**2
    x11 = 3*x7
    x12 = sin(x11)
    x13 = x12 - x6 + 20
    x14 = x13**2
    x15 = x10*x14
    x16 = 2*x15
    x17 = x*x15
    x18 = x - 1
    x19 = x18**2
    x20 = cos(x1)
    x21 = 20*x20*x3
    x22 = x19*x4
    x23 = cos(x7)
    x24 = cos(x11)
    x25 = 24*x13*x24
    x26 = pi**2
    return (1/20000)*pi*x*x14*x19*x23*x4*x9 - 3/8000*pi*x0*x10*x13*x19*x20*x24*x3 + (1/6400)*x0*x10*x14*x19*x2*x3 + (9/80000)*x0*x10*x19*x26*x4*(x12*x13 - x24**2) + (3/20000)*x0*x13*x19*x23*x24*x26*x4*x9 + (1/20000)*pi*x0*x14*x18*x23*x4*x9 + (1/8000)*pi*x0*x14*x19*x20*x23*x3*x9 - 1/160000*x0*x15*x18*x21 - 1/160000*pi*x10*x18*x25*x5 - 1/160000*x10*x22*x25*x7 - 1/80000*x14*x19*x26*x5*(x23**2 + x8*x9) - 1/160000*x16*x22 - 1/160000*x16*x5 - 1/20000*x17*x18*x4 - 1/160000*x17*x19*x21


def uxy(x, y):
    x0 = 20*y
    x1 = pi*x
    x2 = 3*x1
    x3 = -x0 + sin(x2) + 20
    x4 = x3**2
    x5 = 5*x
    x6 = sin(x5)
    x7 = 7*y
    x8 = sin(x7)
    x9 = x6*x8 + 3
    x10 = x1*x9
    x11 = x - 1
    x12 = x11*cos(x1)
    x13 = x0 - sin(x1)
    x14 = x13**2
    x15 = x*x14
    x16 = cos(x7)
    x17 = x16*x4
    x18 = 14*x6
    x19 = x17*x18
    x20 = x11*x14
    x21 = cos(x2)
    x22 = x10*x21
    x23 = 80*x9
    x24 = x13*x4
    x25 = x23*x24
    x26 = x23*x3
    x27 = cos(x5)
    x28 = x*x11
    x29 = 200*x8
    x30 = x14*x27*x28
    x31 = x1*x12
    return -1/160000*x28*(x*x25 + 42*x1*x16*x20*x21*x3*x6 - 40*x10*x12*x4 + 240*x11*x13*x22*x3 + x11*x25 + x13*x26*x31 + x15*x19 - x15*x26 - x16*x18*x24*x31 + 35*x17*x30 + x19*x20 - 120*x20*x22 - x20*x26 + x24*x27*x28*x29 - x29*x3*x30)


def uyy(x, y):
    x0 = 20*y
    x1 = pi*x
    x2 = x0 - sin(x1)
    x3 = x2**2
    x4 = sin(5*x)
    x5 = 7*y
    x6 = x4*sin(x5)
    x7 = x6 + 3
    x8 = 800*x7
    x9 = -x0 + sin(3*x1) + 20
    x10 = x9**2
    x11 = 560*x4*cos(x5)
    return -1/160000*x**2*(x - 1)**2*(x10*x11*x2 - 49*x10*x3*x6 + x10*x8 - x11*x3*x9 - 3200*x2*x7*x9 + x3*x8)


def f(x, y):
    x0 = 5*x
    x1 = sin(x0)
    x2 = 7*y
    x3 = sin(x2)
    x4 = x1*x3
    x5 = x4 + 3
    x6 = 1600*x5
    x7 = 20*y
    x8 = pi*x
    x9 = sin(x8)
    x10 = -x9
    x11 = x10 + x7
    x12 = x11**2
    x13 = x**2
    x14 = x12*x13
    x15 = 3*x8
    x16 = sin(x15)
    x17 = x16 - x7 + 20
    x18 = x17**2
    x19 = x18*x6
    x20 = cos(x0)
    x21 = x20*x3
    x22 = 16000*x21
    x23 = x - 1
    x24 = x23**2
    x25 = x12*x24
    x26 = x*x25
    x27 = x*x24
    x28 = x18*x22
    x29 = x14*x23
    x30 = x13*x23
    x31 = 6400*x5
    x32 = x*x23
    x33 = x12*x32
    x34 = x18*x32
    x35 = x13*x24
    x36 = pi**2
    x37 = x36*x5
    x38 = cos(x8)
    x39 = cos(x15)
    x40 = x38*x39
    x41 = 19200*x37*x40
    x42 = cos(x2)
    x43 = pi*x38
    x44 = x17*x21
    x45 = 32000*x43*x44
    x46 = x17*x5
    x47 = x24*x46
    x48 = x38*x8
    x49 = x30*x46
    x50 = pi*x39
    x51 = x44*x50
    x52 = 48000*x51
    x53 = x12*x18
    x54 = x21*x53
    x55 = 240*x54
    x56 = x11*x18
    x57 = x1*x42
    x58 = 1120*x57
    x59 = x56*x58
    x60 = x39*x8
    x61 = x46*x50
    x62 = 4480*x57
    x63 = x18*x37
    x64 = x13*x63
    x65 = x38**2
    x66 = 20*x65
    x67 = x35*x65
    x68 = x39**2
    x69 = pi**4
    x70 = x5*x69
    x71 = x68*x70
    x72 = 144*x71
    x73 = x18*x21*x27
    x74 = x36*x65
    x75 = 200*x74
    x76 = x18*x21*x30
    x77 = 560*x57
    x78 = x36*x9
    x79 = x18*x77*x78
    x80 = 180*x68
    x81 = x34*x37
    x82 = 80*x81
    x83 = x20*x42
    x84 = 11200*x83
    x85 = x27*x56
    x86 = x30*x56
    x87 = x11*x17
    x88 = x4*x87
    x89 = 80000*x88
    x90 = 1800*x68
    x91 = x12*x36
    x92 = 5040*x16*x57*x91
    x93 = x24*x63
    x94 = x11*x16
    x95 = 28800*x37*x94
    x96 = x12*x17
    x97 = 14000*x57
    x98 = x96*x97
    x99 = x36*x57
    x100 = 6720*x40*x99
    x101 = x100*x11
    x102 = 720*x51
    x103 = x43*x87
    x104 = pi**3
    x105 = 288*x5
    x106 = x60*x96
    x107 = x4*x53
    x108 = x50*x57*x87
    x109 = x104*x39
    x110 = x109*x44
    x111 = 600*x110
    x112 = 240*x65
    x113 = x104*x27
    x114 = x113*x39*x46
    x115 = x109*x49
    x116 = x43*x56
    x117 = x116*x4
    x118 = x83*x87
    x119 = 11200*x118*x43
    x120 = x50*x96
    x121 = 33600*x118*x50
    x122 = x11*x9
    x123 = 20*x122
    x124 = x122*x35
    x125 = x116*x21
    x126 = x122*x36
    x127 = 200*x126
    x128 = 1600*x37
    x129 = x122 + x65
    x130 = x129*x35
    x131 = 5*y
    x132 = x10 + x131
    x133 = x132*x18
    x134 = x104*x21*x38
    x135 = x134*x35
    x136 = x38*x5
    x137 = x113*x136
    x138 = 32*x133
    x139 = x104*x136
    x140 = 8*x139
    x141 = x139*x30
    x142 = x16*x17
    x143 = x4*x91
    x144 = -x131 + x16 + 5
    x145 = x35*x40*x70
    x146 = x142 - x68
    x147 = x36*x40*x88
    x148 = x11*x142
    x149 = 240*x122
    x150 = 720*x148
    x151 = 4*x129
    x152 = 40*x129*x36
    x153 = x35*x40*x69
    x154 = x146*x35
    x155 = 48*x129
    x156 = 144*x11*x146
    x157 = 800*x5
    x158 = 3200*x5
    x159 = -49*x107 + x12*x157 + x157*x18 - x158*x87 + x56*x77 - x77*x96
    x160 = 2*x159
    x161 = 2688000*x57
    x162 = 235200*x4
    x163 = 54880*x57
    x164 = 4000*x21
    x165 = x18*x43
    x166 = x11*x43
    x167 = x158*x17
    x168 = x12*x50
    x169 = x11*x50
    x170 = 2800*x83
    x171 = -x103*x58 - 3360*x108 - 98*x117 - x12*x164 + 294*x120*x4 - x164*x18 + x165*x77 + x166*x6 - x167*x43 + 1680*x168*x57 + 9600*x169*x5 - x170*x56 + x170*x96 + x22*x87 + 245*x54 - 4800*x61
    x172 = 20000*x4
    x173 = 14400*x37
    x174 = x17*x58
    x175 = 10080*x99
    x176 = 98*x18*x4
    x177 = 882*x143
    return (7/250)*x*x1*x12*x17*x23*x42 + (597/20000)*pi*x*x1*x12*x17*x24*x3*x39 + (199/20000)*x*x1*x12*x18*x23*x3 + (21/500)*pi*x*x1*x12*x24*x39*x42 + (7/500)*pi*x*x1*x18*x24*x38*x42 + (9/2000)*x*x104*x11*x24*x38*x5*x68 + (27/5000)*x*x104*x12*x144*x24*x39*x5 + (81/20000)*x*x104*x12*x16*x24*x39*x5 + (27/20000)*x*x104*x12*x17*x24*x39*x5 + (3/20000)*x*x104*x18*x24*x38*x5*x9 + (9/500)*x*x11*x17*x20*x24*x3*x36*x38*x39 + (2/5)*x*x11*x17*x20*x24*x3 + (9/1250)*x*x11*x17*x23*x36*x38*x39*x5 + (4/25)*x*x11*x17*x23*x5 + (3/500)*pi*x*x11*x18*x20*x23*x3*x38 + (3/5000)*pi*x*x11*x18*x38*x5 + (1/25)*pi*x*x11*x24*x38*x5 + (6/25)*pi*x*x11*x24*x39*x5 + (9/4000)*x*x12*x146*x20*x24*x3*x36 + (9/10000)*x*x12*x146*x23*x36*x5 + (9/800)*x*x12*x16*x17*x20*x24*x3*x36 + (9/2000)*x*x12*x16*x17*x23*x36*x5 + (7/100)*x*x12*x17*x20*x24*x42 + (99/8000)*x*x12*x18*x20*x24*x3 + (1/40000)*x*x171*x24 - 1/160000*x*x55 + (63/1000)*x1*x11*x13*x146*x24*x36*x42 + (1/640)*x1*x11*x13*x18*x24*x3*x36*x9 + (7/80)*x1*x11*x13*x18*x24*x42 + (597/20000)*pi*x1*x12*x13*x17*x23*x3*x39 + (7/1000)*x1*x12*x13*x17*x42 + (199/80000)*x1*x12*x13*x18*x3 + (21/500)*pi*x1*x12*x13*x23*x39*x42 + (9/640)*x1*x12*x13*x24*x3*x36*x68 + (1/8)*x1*x12*x13*x24*x3 + (7/1000)*x1*x12*x17*x24*x42 + (199/80000)*x1*x12*x18*x24*x3 + (7/1000)*x1*x129*x13*x17*x24*x36*x42 + (37/40000)*x1*x129*x13*x18*x24*x3*x36 + (21/500)*x1*x13*x17*x24*x36*x38*x39*x42 + (7/500)*pi*x1*x13*x18*x23*x38*x42 + (1/640)*x1*x13*x18*x24*x3*x36*x65 + (1/8)*x1*x13*x18*x24*x3 - 1/160000*x101*x35 - 1/160000*x102*x14 - 1/160000*x102*x25 - 1/160000*x103*x30*x62 + (9/800)*x104*x11*x13*x20*x24*x3*x38*x68 + (9/2000)*x104*x11*x13*x23*x38*x5*x68 + (27/2000)*x104*x12*x13*x144*x20*x24*x3*x39 + (27/5000)*x104*x12*x13*x144*x23*x39*x5 + (81/8000)*x104*x12*x13*x16*x20*x24*x3*x39 + (81/20000)*x104*x12*x13*x16*x23*x39*x5 + (27/8000)*x104*x12*x13*x17*x20*x24*x3*x39 + (27/20000)*x104*x12*x13*x17*x23*x39*x5 + (3/8000)*x104*x13*x18*x20*x24*x3*x38*x9 + (3/20000)*x104*x13*x18*x23*x38*x5*x9 - 1/160000*x105*x106 - 1/160000*x105*x120*x23 - 9/500*x106*x21*x23 - 37/3200*x107*x35 - 21/250*x108*x30 + (9/40000)*x11*x13*x146*x24*x5*x69*x9 + (9/10000)*x11*x13*x16*x17*x24*x5*x69*x9 + (9/500)*x11*x13*x17*x20*x23*x3*x36*x38*x39 + (2/5)*x11*x13*x17*x20*x23*x3 + (9/5000)*x11*x13*x17*x36*x38*x39*x5 + (1/25)*x11*x13*x17*x5 + (3/2000)*pi*x11*x13*x18*x20*x3*x38 + (1/10)*pi*x11*x13*x20*x24*x3*x38 + (3/5)*pi*x11*x13*x20*x24*x3*x39 + (1/25)*pi*x11*x13*x23*x38*x5 + (6/25)*pi*x11*x13*x23*x39*x5 - 9/4000*x11*x134*x154 - 27/5000*x11*x144*x145 + (9/5000)*x11*x17*x24*x36*x38*x39*x5 + (1/25)*x11*x17*x24*x5 + (3/2000)*pi*x11*x18*x20*x24*x3*x38 + (3/5000)*pi*x11*x18*x23*x38*x5 - 3/4000*x110*x130 - 1/160000*x111*x124 - 1/160000*x111*x67 - 1/160000*x112*x114 - 1/160000*x112*x115 - 1/160000*x114*x149 - 1/160000*x114*x155 - 1/160000*x115*x149 - 1/160000*x115*x155 - 199/20000*x117*x30 - 1/160000*x119*x35 + (9/4000)*x12*x13*x146*x20*x23*x3*x36 + (9/40000)*x12*x13*x146*x36*x5 + (9/800)*x12*x13*x16*x17*x20*x23*x3*x36 + (9/8000)*x12*x13*x16*x17*x36*x5 + (7/100)*x12*x13*x17*x20*x23*x42 + (297/8000)*pi*x12*x13*x17*x20*x24*x3*x39 + (99/8000)*x12*x13*x18*x20*x23*x3 + (21/200)*pi*x12*x13*x20*x24*x39*x42 + (9/40000)*x12*x146*x24*x36*x5 + (9/8000)*x12*x16*x17*x24*x36*x5 - 81/80000*x12*x35*x70*(x142 + 3*x16**2 - 4*x68) - 1/160000*x121*x35 - 1/160000*x122*x82 - 1/160000*x123*x64 - 1/160000*x123*x93 - 1/160000*x124*x72 - 99/8000*x125*x35 - 1/160000*x127*x73 - 1/160000*x127*x76 - 1/160000*x128*x130 + (9/40000)*x129*x13*x16*x17*x24*x5*x69 - 1/10000*x129*x81 + (9/100)*x13*x146*x24*x36*x5 + (9/40000)*x13*x146*x24*x5*x65*x69 + (9/10000)*x13*x16*x17*x24*x5*x65*x69 - 1/160000*x13*x160 + (1/50)*x13*x17*x24*x36*x5*x9 + (9/20000)*x13*x17*x24*x38*x39*x5*x69*x9 + (1/40000)*x13*x171*x23 + (7/200)*pi*x13*x18*x20*x24*x38*x42 + (1/80000)*x13*x18*x24*x5*x69*(x122 + 4*x65 - 3*x9**2) - 1/160000*x13*x19 - 1/160000*x13*x59 - 9/40000*x130*x71 - 3/5000*x132*x153*x46 - 1/2000*x133*x135 - 9/800*x135*x148 - 1/8000*x135*x56 - 1/160000*x137*x138 - 1/160000*x137*x150 - 1/160000*x137*x156 - 1/160000*x138*x141 - 1/160000*x14*x37*x80 - 1/160000*x14*x6 - 1/160000*x140*x85 - 1/160000*x140*x86 - 1/160000*x141*x150 - 1/160000*x141*x156 - 9/640*x142*x143*x35 - 333/40000*x143*x154 - 81/20000*x145*x94 - 597/20000*x147*x35 - 1/160000*x151*x64 - 1/160000*x151*x93 - 1/160000*x152*x73 - 1/160000*x152*x76 - 3/2000*x153*x5*x87 - 1/20000*x159*x32 - 1/160000*x160*x24 - 1/160000*x19*x24 - 1/160000*x21*x26*x36*x90 - 1/160000*x21*x29*x36*x90 - 1/160000*x22*x26 - 1/160000*x22*x29 - 1/160000*x23*x55 - 199/20000*x24*x4*x48*x56 - 1/160000*x24*x48*x62*x87 - 21/250*x24*x57*x60*x87 - 1/160000*x24*x59 - 1/160000*x25*x37*x80 - 1/160000*x25*x6 - 1/160000*x27*x28 - 1/160000*x28*x30 - 3/25*x30*x61 - 1/160000*x31*x33 - 1/160000*x31*x34 - 1/160000*x32*x56*x62 - 9/2000*x33*x37*x68 - 1/160000*x35*x41 - 1/160000*x35*x45 - 1/160000*x35*x52 - 1/160000*x35*x79 - 1/160000*x35*x89 - 1/160000*x35*x92 - 1/160000*x35*x95 - 1/160000*x35*x98 - 1/160000*x35*(2401*x107 + x11*x161 - x12*x162 - x161*x17 - x162*x18 - x163*x56 + x163*x96 + 3840000*x4 + 940800*x88 + 11520000) - 1/160000*x35*(-x100*x17 + x101 + 1225*x107 - x11*x142*x175 + x11*x175*x68 + x119 - x12*x172 - 2940*x120*x21 + x121 + x122*x128 + 980*x125 - x126*x174 - x126*x176 + x128*x65 - x142*x173 + x142*x177 + 1176*x147 - 5600*x165*x83 - x166*x22 - x167*x78 - 16800*x168*x83 - 96000*x169*x21 - x172*x18 + x173*x68 - x174*x74 - x176*x74 - x177*x68 + x41 + x45 + x52 - x56*x97 + x79 + x89 + x92 + x95 + x98) - 2/25*x43*x49 - 2/25*x47*x48 - 3/25*x47*x60 - 3/20000*x5*x53 - 1/160000*x64*x66 - 1/160000*x65*x82 - 1/160000*x66*x93 - 1/160000*x67*x72 - 1/160000*x73*x75 - 1/160000*x75*x76 - 1/160000*x84*x85 - 1/160000*x84*x86
