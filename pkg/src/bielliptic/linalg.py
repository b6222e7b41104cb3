"""Small exact integer linear algebra: Hermite reduction, kernels, saturation.

Everything operates on lists of Python-int rows; sizes here are tiny
(2x4 matrices), so simple Euclidean row reduction is plenty.
"""


def hermite_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; returns the nonzero rows.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot), so the output is a canonical basis of the row lattice.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return []
    m, n = len(mat), len(mat[0])
    pivot_row = 0
    for col in range(n):
        nz = [i for i in range(pivot_row, m) if mat[i][col] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(mat[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = mat[i][col] // mat[base][col]
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[base])]
            nz = [i for i in nz if mat[i][col] != 0]
        base = nz[0]
        mat[pivot_row], mat[base] = mat[base], mat[pivot_row]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-a for a in mat[pivot_row]]
        p = mat[pivot_row][col]
        for i in range(pivot_row):
            q = mat[i][col] // p
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == m:
            break
    return mat[:pivot_row]


def kernel_basis(mat: list[list[int]]) -> list[list[int]]:
    """Basis of the integer kernel {x : mat . x = 0}, canonically reduced."""
    m, n = len(mat), len(mat[0])
    # rows are [column j of mat | e_j]; reduce the first m columns away
    work = [[mat[i][j] for i in range(m)] + [int(k == j) for k in range(n)] for j in range(n)]
    rows = len(work)
    pivot_row = 0
    for col in range(m):
        nz = [i for i in range(pivot_row, rows) if work[i][col] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(work[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = work[i][col] // work[base][col]
                work[i] = [a - q * b for a, b in zip(work[i], work[base])]
            nz = [i for i in nz if work[i][col] != 0]
        work[pivot_row], work[nz[0]] = work[nz[0]], work[pivot_row]
        pivot_row += 1
    kernel = [row[m:] for row in work[pivot_row:]]
    return hermite_rows(kernel)


def saturation_basis(rows: list[list[int]]) -> list[list[int]]:
    """Canonical basis of the saturation of the row lattice in Z^n.

    The saturation is the set of integer vectors orthogonal (standard dot)
    to everything orthogonal to the rows; two kernel computations.
    """
    ann = kernel_basis(rows)
    if not ann:
        n = len(rows[0])
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return kernel_basis(ann)
