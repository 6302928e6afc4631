//! Precomputed constants.

/// B_2, B_4, ..., B_30 as exact numerator/denominator pairs.
pub(crate) const BERNOULLI_EVEN: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// Stieltjes constants γ_0 ..= γ_8, 20 significant digits.
pub(crate) const STIELTJES: [f64; 9] = [
    0.577_215_664_901_532_860_61,
    -0.072_815_845_483_676_724_861,
    -0.009_690_363_192_872_318_484_5,
    0.002_053_834_420_303_345_866_2,
    0.002_325_370_065_467_300_057_5,
    0.000_793_323_817_301_062_701_75,
    -0.000_238_769_345_430_199_609_87,
    -0.000_527_289_567_057_751_046_07,
    -0.000_352_123_353_803_039_509_60,
];
