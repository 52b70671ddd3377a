/// Six-vertex projective plane.
pub const RP2_FACETS: &[[u32; 3]] = &[
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];

/// Nine-vertex complex projective plane, invariant under the translations
/// of the affine plane over `Z_3` on its vertex set.
pub const CP2_FACETS: &[[u32; 5]] = &[
    [0, 1, 2, 3, 4],
    [0, 1, 2, 3, 5],
    [0, 1, 2, 4, 5],
    [0, 1, 3, 4, 6],
    [0, 1, 3, 5, 7],
    [0, 1, 3, 6, 7],
    [0, 1, 4, 5, 6],
    [0, 1, 5, 6, 8],
    [0, 1, 5, 7, 8],
    [0, 1, 6, 7, 8],
    [0, 2, 3, 4, 8],
    [0, 2, 3, 5, 8],
    [0, 2, 4, 5, 6],
    [0, 2, 4, 6, 7],
    [0, 2, 4, 7, 8],
    [0, 2, 5, 6, 8],
    [0, 2, 6, 7, 8],
    [0, 3, 4, 6, 7],
    [0, 3, 4, 7, 8],
    [0, 3, 5, 7, 8],
    [1, 2, 3, 4, 8],
    [1, 2, 3, 5, 7],
    [1, 2, 3, 6, 7],
    [1, 2, 3, 6, 8],
    [1, 2, 4, 5, 7],
    [1, 2, 4, 7, 8],
    [1, 2, 6, 7, 8],
    [1, 3, 4, 6, 8],
    [1, 4, 5, 6, 8],
    [1, 4, 5, 7, 8],
    [2, 3, 5, 6, 7],
    [2, 3, 5, 6, 8],
    [2, 4, 5, 6, 7],
    [3, 4, 5, 6, 7],
    [3, 4, 5, 6, 8],
    [3, 4, 5, 7, 8],
];
