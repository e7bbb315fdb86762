# scripts/tests/known_matrices.py
#
# Small matrices written out by hand, for entrywise comparison.
#
# Entries of the eigenvector matrices are written as powers of b:
# '1', '-b', 'b2', '-b3'. Stage matrices are written one row per line
# as signed column indices: '+2 -4' is +1 in column 2 and -1 in column 4.
#
# This is free and unencumbered software released into the public domain.
# See the file COPYING for more details, or visit <http://unlicense.org>.

import numpy as np

from dfrht.eigen import B

def _bpow(tok):
    sign = -1.0 if tok.startswith('-') else 1.0
    tok = tok.lstrip('+-')
    if tok == '0':
        return 0.0
    if tok == '1':
        return sign
    assert tok.startswith('b')
    return sign * B ** int(tok[1:] or 1)

def bmat(text):
    return np.array([[_bpow(t) for t in row.split()]
                     for row in text.strip().splitlines()])

def sparse_rows(text, ncols):
    rows = text.strip().splitlines()
    m = np.zeros((len(rows), ncols), dtype=np.int8)
    for i, row in enumerate(rows):
        for t in row.split():
            m[i, int(t[1:])] = 1 if t[0] == '+' else -1
    return m

def int_mat(text):
    return np.array([[int(t) for t in row.split()]
                     for row in text.strip().splitlines()], dtype=np.int8)

V4 = bmat("""
1   -b   b2  -b
b   -b2 -b    1
b    1  -b   -b2
b2   b   1    b
""")

V8 = bmat("""
1   -b   b2  -b   b2  -b3  b2  -b
b   -b2  b3  -b2 -b    b2 -b    1
b   -b2 -b    1  -b    b2  b3  -b2
b2  -b3 -b2   b   1   -b  -b2   b
b    1  -b   -b2  b3   b2 -b   -b2
b2   b  -b2  -b3 -b2  -b   1    b
b2   b   1    b  -b2  -b  -b2  -b3
b3   b2  b    b2  b    1   b    b2
""")

VBAR4 = bmat("""
1   -b  -b    b2
b    1  -b2  -b
b   -b2  1   -b
b2   b   b    1
""")

VBAR8 = bmat("""
1   -b  -b    b2 -b    b2  b2  -b3
b    1  -b2  -b  -b2  -b   b3   b2
b   -b2  1   -b  -b2   b3 -b    b2
b2   b   b    1  -b3  -b2 -b2  -b
b   -b2 -b2   b3  1   -b  -b    b2
b2   b  -b3  -b2  b    1  -b2  -b
b2  -b3  b   -b2  b   -b2  1   -b
b3   b2  b2   b   b2   b   b    1
""")

P4 = int_mat("""
1 0 0 0
0 0 0 1
0 1 0 0
0 0 1 0
""")

P8 = int_mat("""
1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 1 0 0 0 0 0 0
0 0 0 0 0 0 1 0
0 0 1 0 0 0 0 0
0 0 0 0 0 1 0 0
""")

S8 = int_mat("""
1 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0
0 1 0 0 0 0 0 0
0 0 0 0 0 1 0 0
0 0 1 0 0 0 0 0
0 0 0 0 0 0 1 0
0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 1
""")

J4 = int_mat("""
0 0 0 1
0 0 1 0
0 1 0 0
1 0 0 0
""")

A4 = [ np.eye(4, dtype=np.int8),
       int_mat("""
 0 -1 -1  0
 1  0  0 -1
 1  0  0 -1
 0  1  1  0
"""),
       int_mat("""
 0  0  0  1
 0  0 -1  0
 0 -1  0  0
 1  0  0  0
""") ]

A8 = [ np.eye(8, dtype=np.int8),
       int_mat("""
 0 -1 -1  0 -1  0  0  0
 1  0  0 -1  0 -1  0  0
 1  0  0 -1  0  0 -1  0
 0  1  1  0  0  0  0 -1
 1  0  0  0  0 -1 -1  0
 0  1  0  0  1  0  0 -1
 0  0  1  0  1  0  0 -1
 0  0  0  1  0  1  1  0
"""),
       int_mat("""
 0  0  0  1  0  1  1  0
 0  0 -1  0 -1  0  0  1
 0 -1  0  0 -1  0  0  1
 1  0  0  0  0 -1 -1  0
 0 -1 -1  0  0  0  0  1
 1  0  0 -1  0  0 -1  0
 1  0  0 -1  0 -1  0  0
 0  1  1  0  1  0  0  0
"""),
       int_mat("""
 0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  1  0
 0  0  0  0  0  1  0  0
 0  0  0  0 -1  0  0  0
 0  0  0  1  0  0  0  0
 0  0 -1  0  0  0  0  0
 0 -1  0  0  0  0  0  0
 1  0  0  0  0  0  0  0
""") ]

A16x8 = sparse_rows("""
+0
+1
-1
+0
+2
+3
-3
+2
+4
+5
-5
+4
+6
+7
-7
+6
""", 8)

A24x16 = sparse_rows("""
+0
+1
+4
+5
+2 -4
+3 -5
+0 +6
+1 +7
-6
-7
+2
+3
+8
+9
+12
+13
+10 -12
+11 -13
+8 +14
+9 +15
-14
-15
+10
+11
""", 16)

A32x24 = sparse_rows("""
+0
+1
+2
+3
+12
+13
+14
+15
+4 -12
+5 -13
+6 -14
+7 -15
+0 +16
+1 +17
+2 +18
+3 +19
+8 -16
+9 -17
+10 -18
+11 -19
+4 +20
+5 +21
+6 +22
+7 +23
-20
-21
-22
-23
+8
+9
+10
+11
""", 24)

# Multiplications and additions for N = 2, 4, ..., 1024 (real input).
FAST_MULTS = [10, 32, 88, 224, 544, 1280, 2944, 6656, 14848, 32768]
FAST_ADDS = {2: 6, 4: 36, 8: 144, 16: 480, 512: 69120, 1024: 168960}
DIRECT_MULTS = [8, 32, 128, 512, 2048, 8192, 32768, 131072, 524288, 2097152]
DIRECT_ADDS = [4, 24, 112, 480, 1984, 8064, 32512, 130560, 523264, 2095104]

# Local variables:
# python-indent: 4
# End:
