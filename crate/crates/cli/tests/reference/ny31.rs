#![allow(clippy::approx_constant)]

// Printed ny31 reference columns, rounded as published.

pub const Y: [f64; 31] = [
    -2.07, -0.22, 0.58, -1.87, -0.74, -1.97, -1.90, 2.31, -0.14, -1.21, -1.43, 1.56, -0.00, 0.41, 0.08, -2.15, -0.34, 0.86, 0.01, 1.11, -0.08, 0.61, 2.05, 0.57, 1.10, -2.42, -0.38, 0.07, 0.96, -0.21, 1.14,
];

pub const SD: [f64; 31] = [
    2.78, 2.76, 1.57, 1.42, 1.39, 1.37, 1.36, 1.32, 1.22, 1.22, 1.20, 1.14, 1.10, 1.08, 1.04, 1.03, 1.02, 1.02, 1.01, 0.98, 0.96, 0.93, 0.93, 0.91, 0.90, 0.84, 0.78, 0.75, 0.74, 0.66, 0.62,
];

pub const B_HB: [f64; 31] = [
    0.079, 0.081, 0.249, 0.305, 0.318, 0.327, 0.332, 0.352, 0.413, 0.413, 0.427, 0.473, 0.508, 0.527, 0.568, 0.579, 0.590, 0.590, 0.602, 0.639, 0.666, 0.710, 0.710, 0.742, 0.758, 0.870, 1.000, 1.000, 1.000, 1.000, 1.000,
];

pub const B_F: [f64; 31] = [
    0.947, 0.946, 0.850, 0.823, 0.817, 0.812, 0.810, 0.801, 0.774, 0.774, 0.769, 0.750, 0.736, 0.729, 0.714, 0.710, 0.706, 0.706, 0.702, 0.689, 0.680, 0.666, 0.666, 0.656, 0.651, 0.619, 0.584, 0.565, 0.558, 0.501, 0.470,
];

pub const B_MLE: [f64; 31] = [
    0.952, 0.952, 0.864, 0.839, 0.833, 0.829, 0.827, 0.818, 0.794, 0.794, 0.788, 0.770, 0.758, 0.751, 0.736, 0.733, 0.729, 0.729, 0.725, 0.713, 0.704, 0.691, 0.691, 0.681, 0.677, 0.646, 0.611, 0.592, 0.586, 0.529, 0.498,
];

pub const B_ADM: [f64; 31] = [
    0.922, 0.921, 0.790, 0.754, 0.746, 0.741, 0.738, 0.726, 0.694, 0.694, 0.687, 0.664, 0.648, 0.640, 0.622, 0.618, 0.613, 0.613, 0.608, 0.594, 0.584, 0.568, 0.568, 0.558, 0.552, 0.518, 0.481, 0.461, 0.455, 0.399, 0.369,
];

pub const B_SHP: [f64; 31] = [
    0.926, 0.925, 0.808, 0.777, 0.770, 0.766, 0.763, 0.753, 0.725, 0.725, 0.719, 0.700, 0.686, 0.679, 0.664, 0.660, 0.656, 0.656, 0.652, 0.640, 0.631, 0.618, 0.618, 0.609, 0.604, 0.575, 0.542, 0.525, 0.519, 0.469, 0.442,
];

pub const SQRT_V: [f64; 31] = [
    0.047, 0.047, 0.103, 0.115, 0.118, 0.119, 0.120, 0.124, 0.133, 0.133, 0.134, 0.140, 0.144, 0.146, 0.149, 0.150, 0.151, 0.151, 0.152, 0.155, 0.157, 0.160, 0.160, 0.161, 0.162, 0.167, 0.171, 0.173, 0.174, 0.177, 0.178,
];

pub const MU_SHP: [f64; 31] = [
    -0.15, -0.02, 0.11, -0.42, -0.17, -0.46, -0.45, 0.57, -0.04, -0.33, -0.40, 0.47, -0.00, 0.13, 0.03, -0.73, -0.12, 0.30, 0.00, 0.40, -0.03, 0.23, 0.78, 0.22, 0.44, -1.03, -0.17, 0.03, 0.46, -0.11, 0.64,
];

pub const S_SHP: [f64; 31] = [
    0.76, 0.76, 0.69, 0.70, 0.67, 0.70, 0.70, 0.72, 0.64, 0.66, 0.66, 0.66, 0.62, 0.61, 0.60, 0.68, 0.60, 0.61, 0.60, 0.61, 0.58, 0.58, 0.66, 0.58, 0.59, 0.68, 0.53, 0.52, 0.54, 0.48, 0.51,
];
