// Generated from the transcribed kernel brackets; edit the generator, not this file.

use super::{BracketDef, KernelDef, Term};

const P11: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 16,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 32,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 124,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 472,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 1040,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 736,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 208,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 32,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -288,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -768,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -1152,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 256,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 192,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 20,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -80,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -704,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 176,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -64,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 272,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 224,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 160,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -140,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 24,
        den: 1,
    },
];

const R11: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 35,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -160,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -294,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 588,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 324,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -600,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -216,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -80,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 544,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -1632,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 1056,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 512,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: -192,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -253,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 1012,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -1400,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 736,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -172,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 16,
        den: 1,
    },
];

const B11: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 115,
        den: 192,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -7,
        den: 8,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 37,
        den: 8,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -35,
        den: 12,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -733,
        den: 48,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -485,
        den: 24,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -523,
        den: 48,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -1073,
        den: 24,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -73,
        den: 12,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -5,
        den: 3,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 1043,
        den: 24,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -125,
        den: 8,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 162,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 364,
        den: 3,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: -232,
        den: 3,
    },
    Term {
        rate: 3,
        tpow: 5,
        num: -14,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 6,
        num: -34,
        den: 3,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1239,
        den: 32,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 507,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -32777,
        den: 48,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 1043,
        den: 12,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 5177,
        den: 16,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 2161,
        den: 12,
    },
    Term {
        rate: 4,
        tpow: 6,
        num: 1949,
        den: 12,
    },
    Term {
        rate: 4,
        tpow: 7,
        num: 43,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 8,
        num: 31,
        den: 3,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: -6887,
        den: 24,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 7153,
        den: 24,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 12731,
        den: 12,
    },
    Term {
        rate: 5,
        tpow: 3,
        num: -5627,
        den: 6,
    },
    Term {
        rate: 5,
        tpow: 4,
        num: -2335,
        den: 6,
    },
    Term {
        rate: 5,
        tpow: 5,
        num: -1697,
        den: 6,
    },
    Term {
        rate: 5,
        tpow: 6,
        num: -173,
        den: 3,
    },
    Term {
        rate: 5,
        tpow: 7,
        num: 26,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 20383,
        den: 48,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: -7297,
        den: 8,
    },
    Term {
        rate: 6,
        tpow: 2,
        num: -4023,
        den: 16,
    },
    Term {
        rate: 6,
        tpow: 3,
        num: 29851,
        den: 24,
    },
    Term {
        rate: 6,
        tpow: 4,
        num: -3907,
        den: 24,
    },
    Term {
        rate: 6,
        tpow: 5,
        num: 397,
        den: 4,
    },
    Term {
        rate: 6,
        tpow: 6,
        num: -547,
        den: 6,
    },
    Term {
        rate: 6,
        tpow: 7,
        num: 68,
        den: 3,
    },
    Term {
        rate: 6,
        tpow: 8,
        num: -8,
        den: 3,
    },
    Term {
        rate: 7,
        tpow: 0,
        num: -2141,
        den: 8,
    },
    Term {
        rate: 7,
        tpow: 1,
        num: 6749,
        den: 8,
    },
    Term {
        rate: 7,
        tpow: 2,
        num: -2018,
        den: 3,
    },
    Term {
        rate: 7,
        tpow: 3,
        num: -1243,
        den: 6,
    },
    Term {
        rate: 7,
        tpow: 4,
        num: 527,
        den: 2,
    },
    Term {
        rate: 7,
        tpow: 5,
        num: -401,
        den: 6,
    },
    Term {
        rate: 7,
        tpow: 6,
        num: 6,
        den: 1,
    },
    Term {
        rate: 8,
        tpow: 0,
        num: 12155,
        den: 192,
    },
    Term {
        rate: 8,
        tpow: 1,
        num: -6281,
        den: 24,
    },
    Term {
        rate: 8,
        tpow: 2,
        num: 19097,
        den: 48,
    },
    Term {
        rate: 8,
        tpow: 3,
        num: -787,
        den: 3,
    },
    Term {
        rate: 8,
        tpow: 4,
        num: 1385,
        den: 16,
    },
    Term {
        rate: 8,
        tpow: 5,
        num: -29,
        den: 2,
    },
    Term {
        rate: 8,
        tpow: 6,
        num: 1,
        den: 1,
    },
];

const N12: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 35,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -160,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -294,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 588,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 324,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -600,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -216,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -80,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 544,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -1632,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 1056,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 512,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: -192,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -253,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 1012,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -1400,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 736,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -172,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 16,
        den: 1,
    },
];

const D12: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -1,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 8,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 31,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 118,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 260,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 184,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 52,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 8,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -72,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -192,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -288,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 64,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 48,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 5,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 4,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -20,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -176,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 44,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 68,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 56,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 40,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -35,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 6,
        den: 1,
    },
];

const P13: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 5,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 36,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -78,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 150,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 52,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 24,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 124,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -156,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -120,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -55,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 132,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -58,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 8,
        den: 1,
    },
];

const A13: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -35,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -32,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 160,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 294,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -588,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -324,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 600,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 216,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 80,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -544,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 1632,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -1056,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: -512,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 192,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 253,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -1012,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 1400,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -736,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 172,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -16,
        den: 1,
    },
];

const C13: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -1,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 18,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 36,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 8,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -32,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 15,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -4,
        den: 1,
    },
];

const P14: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 5,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 36,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -78,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 150,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 52,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 24,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 124,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -156,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -120,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -55,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 132,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -58,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 8,
        den: 1,
    },
];

const A14: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -18,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -36,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -8,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 32,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -15,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 4,
        den: 1,
    },
];

const C14: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -1,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 8,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 31,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 118,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 260,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 184,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 52,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 8,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -72,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -192,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -288,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 64,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 48,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 5,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 4,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -20,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -176,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 44,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 68,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 56,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 40,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -35,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 6,
        den: 1,
    },
];

const P21: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -1,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 3,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 3,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 9,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 7,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 9,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -3,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -3,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -9,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -2,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 3,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -2,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 1,
        den: 8,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 3,
        den: 4,
    },
];

const S21: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 32,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -44,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 16,
        den: 1,
    },
];

const B21: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 11,
        den: 192,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -11,
        den: 48,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -1,
        den: 24,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -55,
        den: 48,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -15,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -5,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -1,
        den: 3,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 11,
        den: 32,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 1,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 29,
        den: 16,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 7,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 259,
        den: 48,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 221,
        den: 12,
    },
    Term {
        rate: 4,
        tpow: 6,
        num: 257,
        den: 12,
    },
    Term {
        rate: 4,
        tpow: 7,
        num: 35,
        den: 3,
    },
    Term {
        rate: 4,
        tpow: 8,
        num: 7,
        den: 3,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -11,
        den: 48,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: -1,
        den: 8,
    },
    Term {
        rate: 6,
        tpow: 2,
        num: -3,
        den: 16,
    },
    Term {
        rate: 6,
        tpow: 3,
        num: -49,
        den: 24,
    },
    Term {
        rate: 6,
        tpow: 4,
        num: -211,
        den: 24,
    },
    Term {
        rate: 6,
        tpow: 5,
        num: -51,
        den: 4,
    },
    Term {
        rate: 6,
        tpow: 6,
        num: 13,
        den: 6,
    },
    Term {
        rate: 6,
        tpow: 7,
        num: 8,
        den: 3,
    },
    Term {
        rate: 6,
        tpow: 8,
        num: -8,
        den: 3,
    },
    Term {
        rate: 8,
        tpow: 0,
        num: 11,
        den: 192,
    },
    Term {
        rate: 8,
        tpow: 1,
        num: 1,
        den: 24,
    },
    Term {
        rate: 8,
        tpow: 2,
        num: -23,
        den: 48,
    },
    Term {
        rate: 8,
        tpow: 3,
        num: 13,
        den: 6,
    },
    Term {
        rate: 8,
        tpow: 4,
        num: 25,
        den: 16,
    },
    Term {
        rate: 8,
        tpow: 5,
        num: -5,
        den: 2,
    },
    Term {
        rate: 8,
        tpow: 6,
        num: 1,
        den: 1,
    },
];

const D22: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -1,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 36,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 36,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -3,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -36,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 12,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 6,
        den: 1,
    },
];

const S22: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 24,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 32,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -44,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 16,
        den: 1,
    },
];

const T23: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -2,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 14,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 20,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -4,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -10,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 8,
        den: 1,
    },
];

const X23: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -1,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -1,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -2,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 1,
        den: 1,
    },
];

const Y23: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 3,
        den: 16,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -3,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 3,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -3,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -7,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -7,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 16,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -3,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 3,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 2,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -11,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 1,
        den: 1,
    },
];

const Z24: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -2,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 4,
        den: 1,
    },
];

const P31: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -35,
        den: 16,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -3,
        den: 8,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 17,
        den: 4,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -7,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 5,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 5,
        den: 16,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -1,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -5,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 11,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 11,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 1,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -9,
        den: 2,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -18,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: -4,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 3,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 31,
        den: 16,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -59,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 65,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -23,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 13,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -1,
        den: 2,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 1,
        den: 4,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: -1,
        den: 2,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 1,
        den: 2,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -1,
        den: 16,
    },
];

const S31: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -253,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -1012,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -1400,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -736,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: -172,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 544,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 1632,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 1056,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 3,
        num: -512,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 4,
        num: -192,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -294,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -588,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 324,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 600,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -216,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 80,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -32,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -32,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -160,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 35,
        den: 1,
    },
];

const B31: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 12155,
        den: 1984,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 6281,
        den: 248,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 19097,
        den: 496,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 787,
        den: 31,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: 4155,
        den: 496,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: 87,
        den: 62,
    },
    Term {
        rate: 0,
        tpow: 6,
        num: 3,
        den: 31,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -6423,
        den: 248,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -20247,
        den: 248,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -2018,
        den: 31,
    },
    Term {
        rate: 1,
        tpow: 3,
        num: 1243,
        den: 62,
    },
    Term {
        rate: 1,
        tpow: 4,
        num: 51,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 5,
        num: 401,
        den: 62,
    },
    Term {
        rate: 1,
        tpow: 6,
        num: 18,
        den: 31,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 20383,
        den: 496,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 21891,
        den: 248,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12069,
        den: 496,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -29851,
        den: 248,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -3907,
        den: 248,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -1191,
        den: 124,
    },
    Term {
        rate: 2,
        tpow: 6,
        num: -547,
        den: 62,
    },
    Term {
        rate: 2,
        tpow: 7,
        num: -68,
        den: 31,
    },
    Term {
        rate: 2,
        tpow: 8,
        num: -8,
        den: 31,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -6887,
        den: 248,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -7153,
        den: 248,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 12731,
        den: 124,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 5627,
        den: 62,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: -2335,
        den: 62,
    },
    Term {
        rate: 3,
        tpow: 5,
        num: 1697,
        den: 62,
    },
    Term {
        rate: 3,
        tpow: 6,
        num: -173,
        den: 31,
    },
    Term {
        rate: 3,
        tpow: 7,
        num: -78,
        den: 31,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3717,
        den: 992,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -1521,
        den: 248,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -32777,
        den: 496,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -1043,
        den: 124,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 501,
        den: 16,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -2161,
        den: 124,
    },
    Term {
        rate: 4,
        tpow: 6,
        num: 1949,
        den: 124,
    },
    Term {
        rate: 4,
        tpow: 7,
        num: -129,
        den: 31,
    },
    Term {
        rate: 4,
        tpow: 8,
        num: 1,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 1043,
        den: 248,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 375,
        den: 248,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 486,
        den: 31,
    },
    Term {
        rate: 5,
        tpow: 3,
        num: -364,
        den: 31,
    },
    Term {
        rate: 5,
        tpow: 4,
        num: -232,
        den: 31,
    },
    Term {
        rate: 5,
        tpow: 5,
        num: 42,
        den: 31,
    },
    Term {
        rate: 5,
        tpow: 6,
        num: -34,
        den: 31,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -733,
        den: 496,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 485,
        den: 248,
    },
    Term {
        rate: 6,
        tpow: 2,
        num: -523,
        den: 496,
    },
    Term {
        rate: 6,
        tpow: 3,
        num: 1073,
        den: 248,
    },
    Term {
        rate: 6,
        tpow: 4,
        num: -73,
        den: 124,
    },
    Term {
        rate: 6,
        tpow: 5,
        num: 5,
        den: 31,
    },
    Term {
        rate: 7,
        tpow: 0,
        num: -21,
        den: 248,
    },
    Term {
        rate: 7,
        tpow: 1,
        num: -111,
        den: 248,
    },
    Term {
        rate: 7,
        tpow: 2,
        num: -35,
        den: 124,
    },
    Term {
        rate: 8,
        tpow: 0,
        num: 115,
        den: 1984,
    },
];

const S32: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 253,
        den: 160,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 253,
        den: 40,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 35,
        den: 4,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 23,
        den: 5,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: 43,
        den: 40,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: 1,
        den: 10,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -17,
        den: 5,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -51,
        den: 5,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -33,
        den: 5,
    },
    Term {
        rate: 1,
        tpow: 3,
        num: 16,
        den: 5,
    },
    Term {
        rate: 1,
        tpow: 4,
        num: 6,
        den: 5,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 147,
        den: 80,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 147,
        den: 40,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -81,
        den: 40,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -15,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 27,
        den: 20,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -1,
        den: 2,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 1,
        den: 5,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 1,
        den: 5,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -7,
        den: 32,
    },
];

const D32: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -35,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -6,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 68,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -56,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 40,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 5,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -20,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 176,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 44,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 16,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -72,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 192,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -288,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: -64,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: 48,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 31,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -118,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 260,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -184,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 52,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -8,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: -8,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: 8,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -1,
        den: 1,
    },
];

const X33: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 55,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 33,
        den: 2,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 29,
        den: 4,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 1,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -31,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -39,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: 15,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 3,
        num: 3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 39,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -3,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -75,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 13,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -3,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: -1,
        den: 2,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 9,
        den: 2,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -5,
        den: 8,
    },
];

const Y33: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 15,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 1,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 9,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -9,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 3,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -1,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -1,
        den: 8,
    },
];

const P34: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -55,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -132,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -58,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -8,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 124,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 156,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -120,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 3,
        num: -24,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -78,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 150,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -52,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 24,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -36,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: -8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 5,
        den: 1,
    },
];

const X34: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 35,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 3,
        den: 4,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: -17,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: 7,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 2,
        num: -5,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -5,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 1,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 5,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -22,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -11,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -2,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 0,
        num: 9,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -24,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 2,
        num: 36,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 3,
        num: 8,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 4,
        num: -6,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -31,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 59,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -65,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 23,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -13,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 1,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 0,
        num: -1,
        den: 2,
    },
    Term {
        rate: 5,
        tpow: 1,
        num: 1,
        den: 1,
    },
    Term {
        rate: 5,
        tpow: 2,
        num: -1,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 1,
        den: 8,
    },
];

const Y34: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -15,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -1,
        den: 2,
    },
    Term {
        rate: 1,
        tpow: 0,
        num: 4,
        den: 1,
    },
    Term {
        rate: 1,
        tpow: 1,
        num: -3,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -9,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 9,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -3,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 1,
        den: 1,
    },
    Term {
        rate: 3,
        tpow: 1,
        num: -1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 8,
    },
];

const P41: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 5,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 15,
        den: 4,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 6,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -8,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: -11,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: -4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -9,
        den: 8,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -9,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 3,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -31,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 2,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: 3,
        den: 4,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: -9,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 7,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: -9,
        den: 2,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: 1,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 1,
        den: 8,
    },
];

const S41: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 24,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -32,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: -44,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 1,
    },
];

const B41: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -37,
        den: 512,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -37,
        den: 64,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -239,
        den: 128,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -27,
        den: 16,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: 507,
        den: 128,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: 147,
        den: 16,
    },
    Term {
        rate: 0,
        tpow: 6,
        num: 1,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 7,
        num: -9,
        den: 2,
    },
    Term {
        rate: 0,
        tpow: 8,
        num: -2,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 25,
        den: 128,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 75,
        den: 64,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 279,
        den: 128,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -79,
        den: 64,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -459,
        den: 64,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 73,
        den: 32,
    },
    Term {
        rate: 2,
        tpow: 6,
        num: 165,
        den: 16,
    },
    Term {
        rate: 2,
        tpow: 7,
        num: -9,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 8,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -39,
        den: 256,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -39,
        den: 64,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 15,
        den: 128,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: 47,
        den: 32,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 35,
        den: 128,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -205,
        den: 32,
    },
    Term {
        rate: 4,
        tpow: 6,
        num: 257,
        den: 32,
    },
    Term {
        rate: 4,
        tpow: 7,
        num: -35,
        den: 8,
    },
    Term {
        rate: 4,
        tpow: 8,
        num: 7,
        den: 8,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: 1,
        den: 128,
    },
    Term {
        rate: 6,
        tpow: 1,
        num: 1,
        den: 64,
    },
    Term {
        rate: 6,
        tpow: 2,
        num: -55,
        den: 128,
    },
    Term {
        rate: 6,
        tpow: 3,
        num: 45,
        den: 64,
    },
    Term {
        rate: 6,
        tpow: 4,
        num: -15,
        den: 32,
    },
    Term {
        rate: 6,
        tpow: 5,
        num: 1,
        den: 8,
    },
    Term {
        rate: 8,
        tpow: 0,
        num: 11,
        den: 512,
    },
];

const D42: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -5,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -30,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -48,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 64,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: 88,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: 32,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 9,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 36,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -96,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 124,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -3,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 1,
        num: -6,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 2,
        num: 36,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 3,
        num: -56,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 4,
        num: 36,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 5,
        num: -8,
        den: 1,
    },
    Term {
        rate: 6,
        tpow: 0,
        num: -1,
        den: 1,
    },
];

const S42: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -3,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -24,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 32,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: 44,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: 16,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: -3,
        den: 1,
    },
];

const Z43: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: -3,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -8,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: 16,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: 2,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: 4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 1,
    },
];

const P43: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 8,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 1,
        den: 2,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -5,
        den: 4,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -1,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -1,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -1,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 7,
        den: 4,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -5,
        den: 2,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 1,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 8,
    },
];

const S43: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 3,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 12,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: 24,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -32,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 4,
        num: -44,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 5,
        num: -16,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -6,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: -12,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: 56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: -56,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 5,
        num: 16,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 3,
        den: 1,
    },
];

const T44: &[Term] = &[
    Term {
        rate: 0,
        tpow: 0,
        num: 1,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 1,
        num: 4,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 2,
        num: -10,
        den: 1,
    },
    Term {
        rate: 0,
        tpow: 3,
        num: -8,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 0,
        num: -2,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 1,
        num: -4,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 2,
        num: 14,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 3,
        num: -20,
        den: 1,
    },
    Term {
        rate: 2,
        tpow: 4,
        num: 8,
        den: 1,
    },
    Term {
        rate: 4,
        tpow: 0,
        num: 1,
        den: 1,
    },
];

pub(crate) static BRACKETS: [BracketDef; 39] = [
    BracketDef {
        name: "P11",
        shift: 0,
        terms: P11,
    },
    BracketDef {
        name: "R11",
        shift: 0,
        terms: R11,
    },
    BracketDef {
        name: "B11",
        shift: 0,
        terms: B11,
    },
    BracketDef {
        name: "N12",
        shift: -6,
        terms: N12,
    },
    BracketDef {
        name: "D12",
        shift: -6,
        terms: D12,
    },
    BracketDef {
        name: "P13",
        shift: 0,
        terms: P13,
    },
    BracketDef {
        name: "A13",
        shift: 0,
        terms: A13,
    },
    BracketDef {
        name: "C13",
        shift: 0,
        terms: C13,
    },
    BracketDef {
        name: "P14",
        shift: -5,
        terms: P14,
    },
    BracketDef {
        name: "A14",
        shift: -4,
        terms: A14,
    },
    BracketDef {
        name: "C14",
        shift: -6,
        terms: C14,
    },
    BracketDef {
        name: "P21",
        shift: 0,
        terms: P21,
    },
    BracketDef {
        name: "S21",
        shift: 0,
        terms: S21,
    },
    BracketDef {
        name: "B21",
        shift: 0,
        terms: B21,
    },
    BracketDef {
        name: "D22",
        shift: 0,
        terms: D22,
    },
    BracketDef {
        name: "S22",
        shift: 0,
        terms: S22,
    },
    BracketDef {
        name: "T23",
        shift: 0,
        terms: T23,
    },
    BracketDef {
        name: "X23",
        shift: 0,
        terms: X23,
    },
    BracketDef {
        name: "Y23",
        shift: 0,
        terms: Y23,
    },
    BracketDef {
        name: "Z24",
        shift: 0,
        terms: Z24,
    },
    BracketDef {
        name: "P31",
        shift: -6,
        terms: P31,
    },
    BracketDef {
        name: "S31",
        shift: -4,
        terms: S31,
    },
    BracketDef {
        name: "B31",
        shift: -8,
        terms: B31,
    },
    BracketDef {
        name: "S32",
        shift: -4,
        terms: S32,
    },
    BracketDef {
        name: "D32",
        shift: -6,
        terms: D32,
    },
    BracketDef {
        name: "X33",
        shift: -4,
        terms: X33,
    },
    BracketDef {
        name: "Y33",
        shift: -4,
        terms: Y33,
    },
    BracketDef {
        name: "P34",
        shift: -4,
        terms: P34,
    },
    BracketDef {
        name: "X34",
        shift: -6,
        terms: X34,
    },
    BracketDef {
        name: "Y34",
        shift: -4,
        terms: Y34,
    },
    BracketDef {
        name: "P41",
        shift: -6,
        terms: P41,
    },
    BracketDef {
        name: "S41",
        shift: -4,
        terms: S41,
    },
    BracketDef {
        name: "B41",
        shift: -8,
        terms: B41,
    },
    BracketDef {
        name: "D42",
        shift: -6,
        terms: D42,
    },
    BracketDef {
        name: "S42",
        shift: -4,
        terms: S42,
    },
    BracketDef {
        name: "Z43",
        shift: -4,
        terms: Z43,
    },
    BracketDef {
        name: "P43",
        shift: -4,
        terms: P43,
    },
    BracketDef {
        name: "S43",
        shift: -4,
        terms: S43,
    },
    BracketDef {
        name: "T44",
        shift: -4,
        terms: T44,
    },
];

pub(crate) static KERNELS: [KernelDef; 16] = [
    KernelDef {
        family: 1,
        index: 1,
        coef: 0.005208333333333333,
        t_half_pow: -2,
        factors: &[(0, 2), (1, 1), (2, -2)],
        magnitude: false,
    },
    KernelDef {
        family: 1,
        index: 2,
        coef: 1.0,
        t_half_pow: 3,
        factors: &[(3, 1), (4, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 1,
        index: 3,
        coef: 1.0,
        t_half_pow: 0,
        factors: &[(5, 2), (6, -1), (7, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 1,
        index: 4,
        coef: 1.0,
        t_half_pow: 3,
        factors: &[(8, 2), (9, -1), (10, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 2,
        index: 1,
        coef: 0.16666666666666666,
        t_half_pow: -2,
        factors: &[(11, 2), (12, 1), (13, -2)],
        magnitude: false,
    },
    KernelDef {
        family: 2,
        index: 2,
        coef: 2.0,
        t_half_pow: 1,
        factors: &[(15, 1), (14, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 2,
        index: 3,
        coef: 0.125,
        t_half_pow: 0,
        factors: &[(16, 2), (17, -1), (18, -1)],
        magnitude: true,
    },
    KernelDef {
        family: 2,
        index: 4,
        coef: 2.0,
        t_half_pow: 1,
        factors: &[(16, 2), (14, -1), (19, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 3,
        index: 1,
        coef: -0.03225806451612903,
        t_half_pow: -2,
        factors: &[(20, 2), (21, 1), (22, -2)],
        magnitude: false,
    },
    KernelDef {
        family: 3,
        index: 2,
        coef: 12.649110640673518,
        t_half_pow: 3,
        factors: &[(23, 1), (24, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 3,
        index: 3,
        coef: 0.22360679774997896,
        t_half_pow: 0,
        factors: &[(25, 2), (26, -1), (23, -1)],
        magnitude: true,
    },
    KernelDef {
        family: 3,
        index: 4,
        coef: 0.125,
        t_half_pow: 3,
        factors: &[(27, 2), (28, -1), (29, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 4,
        index: 1,
        coef: 0.0625,
        t_half_pow: -2,
        factors: &[(30, 2), (31, 1), (32, -2)],
        magnitude: false,
    },
    KernelDef {
        family: 4,
        index: 2,
        coef: 2.0,
        t_half_pow: 1,
        factors: &[(34, 1), (33, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 4,
        index: 3,
        coef: 8.0,
        t_half_pow: 0,
        factors: &[(36, 2), (37, -1), (35, -1)],
        magnitude: false,
    },
    KernelDef {
        family: 4,
        index: 4,
        coef: 2.0,
        t_half_pow: 1,
        factors: &[(38, 2), (33, -1), (35, -1)],
        magnitude: true,
    },
];
