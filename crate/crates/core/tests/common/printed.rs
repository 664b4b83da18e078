// Values as printed in the reference tables. Generated from the source text;
// do not edit by hand.
#![allow(dead_code)]

/// (n, [W CPr, W eps_r, CP CPr, CP eps_r, WS CPr, WS eps_r, AC CPr, AC eps_r])
pub const T6: &[(u64, [f64; 8])] = &[
    (10, [65.0, 1.40, 98.7, 2.12, 93.0, 1.85, 93.0, 2.11]),
    (20, [87.6, 1.17, 98.9, 1.46, 95.7, 1.32, 95.7, 1.46]),
    (30, [80.9, 1.01, 99.2, 1.18, 97.4, 1.08, 97.4, 1.17]),
    (40, [91.4, 0.89, 97.0, 1.01, 94.3, 0.93, 95.8, 0.99]),
    (50, [87.9, 0.81, 97.0, 0.90, 97.0, 0.83, 97.0, 0.88]),
    (60, [94.1, 0.74, 97.2, 0.82, 95.2, 0.76, 95.2, 0.78]),
    (70, [92.0, 0.69, 95.5, 0.76, 93.2, 0.70, 97.4, 0.73]),
    (80, [90.0, 0.65, 97.7, 0.71, 96.3, 0.66, 96.3, 0.68]),
    (90, [94.6, 0.61, 96.7, 0.66, 95.0, 0.62, 95.0, 0.64]),
    (100, [93.2, 0.58, 95.6, 0.63, 93.6, 0.59, 97.2, 0.61]),
    (110, [91.9, 0.55, 97.6, 0.60, 96.3, 0.56, 96.3, 0.58]),
    (120, [95.4, 0.53, 96.8, 0.57, 95.4, 0.54, 95.4, 0.55]),
    (130, [94.4, 0.51, 96.0, 0.55, 94.5, 0.52, 94.5, 0.53]),
    (140, [93.5, 0.49, 96.7, 0.53, 93.5, 0.50, 96.7, 0.51]),
];

/// (n, [W CPr, W eps_r, CP CPr, CP eps_r, WS CPr, WS eps_r, AC CPr, AC eps_r])
pub const T7: &[(u64, [f64; 8])] = &[
    (150, [92.6, 0.48, 97.2, 0.51, 96.0, 0.48, 96.0, 0.49]),
    (160, [95.5, 0.46, 96.6, 0.49, 95.4, 0.47, 95.4, 0.47]),
    (170, [94.8, 0.45, 96.0, 0.48, 94.7, 0.45, 94.6, 0.46]),
    (180, [94.1, 0.44, 95.4, 0.46, 93.9, 0.44, 96.6, 0.45]),
    (190, [93.4, 0.42, 96.1, 0.45, 96.1, 0.43, 96.1, 0.43]),
    (200, [92.7, 0.41, 96.7, 0.44, 95.6, 0.42, 95.6, 0.42]),
    (210, [95.3, 0.40, 96.2, 0.43, 95.1, 0.41, 95.1, 0.41]),
    (220, [94.8, 0.40, 95.7, 0.42, 94.5, 0.40, 94.5, 0.40]),
    (230, [94.3, 0.39, 96.4, 0.41, 94.0, 0.39, 96.4, 0.39]),
    (240, [93.7, 0.38, 96.0, 0.40, 96.0, 0.38, 96.0, 0.39]),
    (250, [93.2, 0.37, 96.6, 0.39, 95.6, 0.37, 95.6, 0.38]),
    (260, [95.5, 0.36, 96.2, 0.38, 95.1, 0.37, 95.1, 0.37]),
    (270, [95.0, 0.36, 95.8, 0.37, 94.7, 0.36, 94.7, 0.36]),
    (280, [94.6, 0.35, 95.4, 0.37, 94.3, 0.35, 94.3, 0.36]),
    (290, [94.2, 0.34, 96.1, 0.36, 96.1, 0.35, 96.1, 0.35]),
    (300, [93.8, 0.34, 96.6, 0.35, 95.7, 0.34, 95.7, 0.34]),
    (310, [93.3, 0.33, 96.3, 0.35, 95.4, 0.33, 95.4, 0.34]),
    (320, [95.4, 0.33, 96.0, 0.34, 95.0, 0.33, 95.0, 0.33]),
    (330, [95.0, 0.32, 95.7, 0.34, 94.7, 0.32, 94.7, 0.33]),
    (340, [94.7, 0.32, 95.4, 0.33, 94.3, 0.32, 94.3, 0.32]),
    (350, [94.4, 0.31, 96.0, 0.33, 96.0, 0.31, 96.0, 0.32]),
];

/// (n, [W CPr, W eps_r, CP CPr, CP eps_r, WS CPr, WS eps_r, AC CPr, AC eps_r])
pub const T8: &[(u64, [f64; 8])] = &[
    (750000, [93.6, 0.70, 95.8, 0.79, 93.7, 0.75, 97.4, 0.79]),
    (800000, [89.2, 0.68, 96.9, 0.76, 95.2, 0.72, 95.2, 0.76]),
    (850000, [91.9, 0.66, 97.7, 0.73, 96.3, 0.70, 96.3, 0.74]),
    (900000, [94.0, 0.64, 95.7, 0.71, 93.7, 0.68, 97.2, 0.71]),
    (950000, [90.3, 0.63, 96.7, 0.69, 95.2, 0.66, 95.2, 0.69]),
    (1000000, [92.6, 0.61, 97.5, 0.67, 96.3, 0.64, 96.3, 0.67]),
    (1050000, [94.4, 0.60, 95.7, 0.66, 93.9, 0.63, 97.1, 0.65]),
    (1100000, [91.2, 0.58, 96.7, 0.64, 95.3, 0.61, 95.3, 0.64]),
    (1150000, [93.2, 0.57, 97.5, 0.62, 96.3, 0.60, 96.3, 0.62]),
    (1200000, [94.3, 0.56, 95.8, 0.61, 94.2, 0.58, 97.1, 0.60]),
    (1250000, [92.1, 0.55, 96.8, 0.60, 95.5, 0.57, 95.5, 0.59]),
    (1300000, [93.8, 0.54, 97.5, 0.58, 96.4, 0.56, 96.4, 0.58]),
    (1350000, [94.7, 0.53, 96.0, 0.57, 94.6, 0.55, 94.6, 0.57]),
    (1400000, [92.9, 0.52, 96.9, 0.56, 95.7, 0.54, 95.7, 0.56]),
];

/// (n, [W CPr, W eps_r, CP CPr, CP eps_r, WS CPr, WS eps_r, AC CPr, AC eps_r])
pub const T9: &[(u64, [f64; 8])] = &[
    (1500000, [91.9, 0.50, 96.3, 0.54, 94.9, 0.52, 94.9, 0.53]),
    (1550000, [93.6, 0.49, 97.1, 0.53, 96.0, 0.51, 96.0, 0.52]),
    (1600000, [94.4, 0.49, 95.6, 0.52, 94.1, 0.50, 96.8, 0.52]),
    (1650000, [92.7, 0.48, 96.5, 0.51, 95.3, 0.49, 95.3, 0.51]),
    (1700000, [94.2, 0.47, 97.2, 0.51, 96.2, 0.49, 96.2, 0.50]),
    (1750000, [94.9, 0.47, 95.9, 0.50, 94.6, 0.48, 94.6, 0.49]),
    (1800000, [93.5, 0.46, 96.7, 0.49, 95.6, 0.47, 95.6, 0.48]),
    (1850000, [94.8, 0.45, 95.3, 0.48, 93.9, 0.46, 96.5, 0.48]),
    (1900000, [92.8, 0.45, 96.2, 0.48, 95.0, 0.46, 95.0, 0.47]),
    (1950000, [94.1, 0.44, 97.0, 0.47, 96.0, 0.45, 96.0, 0.46]),
    (2000000, [94.8, 0.44, 95.7, 0.46, 94.4, 0.45, 94.4, 0.46]),
    (2050000, [93.5, 0.43, 96.5, 0.46, 95.5, 0.44, 95.5, 0.45]),
    (2100000, [94.7, 0.43, 95.1, 0.45, 93.8, 0.43, 96.3, 0.44]),
    (2150000, [92.9, 0.42, 96.0, 0.45, 94.9, 0.43, 94.9, 0.44]),
    (2200000, [94.2, 0.42, 96.8, 0.44, 95.8, 0.42, 95.8, 0.43]),
    (2250000, [94.7, 0.41, 95.6, 0.44, 94.4, 0.42, 94.4, 0.43]),
    (2300000, [93.6, 0.41, 96.4, 0.43, 95.4, 0.41, 95.4, 0.42]),
    (2350000, [94.8, 0.40, 95.1, 0.43, 96.2, 0.41, 96.2, 0.42]),
    (2400000, [93.1, 0.40, 96.0, 0.42, 94.9, 0.41, 94.9, 0.41]),
    (2450000, [94.3, 0.39, 96.7, 0.42, 95.8, 0.40, 95.8, 0.41]),
    (2500000, [94.8, 0.39, 95.5, 0.41, 94.4, 0.40, 94.4, 0.40]),
];

/// (epsilon, [W, CP, WS, AC]) for p* = 1e-1 .. 1e-5, eps_r = 0.4
pub const T1: &[(f64, [f64; 4])] = &[
    (4.0e-2, [2.2e2, 3.0e2, 2.2e2, 2.3e2]),
    (4.0e-3, [2.4e3, 3.3e3, 2.5e3, 2.5e3]),
    (4.0e-4, [2.4e4, 3.4e4, 2.5e4, 2.6e4]),
    (4.0e-5, [2.4e5, 3.4e5, 2.5e5, 2.6e5]),
    (4.0e-6, [2.4e6, 3.4e6, 2.5e6, 2.6e6]),
];

/// per p = 1e-1 .. 1e-5: ([n for schemes 1-4], [Wald CPr for schemes 1-4])
pub const T2: &[([f64; 4], [f64; 4])] = &[
    ([2.2e2, 6.0e2, 2.2e6, 6.0e6], [93.8, 94.5, 95.0, 95.0]),
    ([2.4e1, 6.0e2, 2.4e5, 6.0e6], [21.4, 93.1, 95.0, 95.0]),
    ([3.0e0, 6.0e2, 2.4e4, 6.0e6], [0.3, 45.2, 93.1, 95.0]),
    ([1.0e0, 6.0e2, 2.4e3, 6.0e6], [0.0, 5.8, 21.3, 94.9]),
    ([1.0e0, 6.0e2, 2.4e2, 6.0e6], [0.0, 0.6, 0.2, 94.9]),
];

pub const T3_EPS_R: [f64; 7] = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.75];
/// per p* = 1e-1 .. 1e-5: ([Wald n], [Wald CPr]) over T3_EPS_R
pub const T3: &[([f64; 7], [f64; 7])] = &[
    ([1.4e4, 3.5e3, 8.7e2, 3.9e2, 2.2e2, 1.4e2, 6.2e1], [94.9, 94.9, 95.0, 94.3, 93.8, 93.3, 94.7]),
    ([1.5e5, 3.8e4, 9.5e3, 4.2e3, 2.4e3, 1.5e3, 6.8e2], [95.0, 94.9, 95.2, 94.0, 95.2, 92.5, 90.2]),
    ([1.5e6, 3.8e5, 9.6e4, 4.3e4, 2.4e4, 1.5e4, 6.8e3], [95.0, 95.0, 95.0, 94.7, 93.1, 93.3, 90.4]),
    ([1.5e7, 3.8e6, 9.6e5, 4.3e5, 2.4e5, 1.5e5, 6.8e4], [95.0, 95.0, 95.0, 94.7, 93.1, 93.3, 90.4]),
    ([1.5e8, 3.8e7, 9.6e6, 4.3e6, 2.4e6, 1.5e6, 6.8e5], [95.0, 95.0, 95.0, 94.7, 93.1, 93.3, 90.4]),
];

/// per p* = 1e-1 .. 1e-5: a=5 (alpha 0.1, 0.05, 0.01), a=10 (alpha 0.1, 0.05, 0.01)
pub const T4: &[[f64; 6]] = &[
    [0.70, 0.83, 1.09, 0.49, 0.59, 0.77],
    [0.73, 0.87, 1.15, 0.52, 0.62, 0.81],
    [0.74, 0.88, 1.15, 0.52, 0.62, 0.81],
    [0.74, 0.88, 1.15, 0.52, 0.62, 0.81],
    [0.74, 0.88, 1.15, 0.52, 0.62, 0.81],
];

/// scheme-major, p = 1e-1 .. 1e-5 within each scheme: [W, CP, WS, AC] CPr
pub const B1: &[[f64; 4]] = &[
    [93.8, 96.9, 94.7, 95.9],
    [21.4, 97.6, 97.6, 97.6],
    [0.3, 99.7, 99.7, 99.7],
    [0.0, 100.0, 100.0, 100.0],
    [0.0, 100.0, 100.0, 100.0],
    [94.5, 95.9, 95.2, 95.2],
    [93.1, 96.3, 94.1, 97.8],
    [45.2, 97.7, 97.7, 99.7],
    [5.8, 99.8, 94.2, 100.0],
    [0.6, 99.4, 99.4, 100.0],
    [95.0, 95.0, 95.0, 95.0],
    [95.0, 95.1, 95.0, 95.1],
    [93.1, 96.0, 94.9, 94.9],
    [21.3, 97.5, 97.5, 99.8],
    [0.2, 99.8, 99.8, 100.0],
    [95.0, 95.0, 95.0, 95.0],
    [95.0, 95.0, 95.0, 95.0],
    [95.0, 95.1, 95.0, 95.0],
    [94.9, 95.2, 95.0, 95.0],
    [94.9, 96.1, 95.5, 95.5],
];

/// per p* = 1e-1 .. 1e-5, eps_r = 0.75: [W, CP, WS, AC] CPr
pub const B2: &[[f64; 4]] = &[
    [94.7, 97.0, 94.6, 94.6],
    [90.2, 97.0, 94.9, 97.0],
    [90.4, 96.9, 94.6, 96.9],
    [90.4, 96.9, 94.6, 96.9],
    [90.4, 96.9, 94.6, 96.9],
];
