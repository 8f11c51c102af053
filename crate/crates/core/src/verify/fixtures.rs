//! Printed values, transcribed cell by cell. Each fixture table is read by
//! exactly one check, whose id is the table id.

use std::fmt;

use serde::Serialize;

use crate::poly::QPoly;

/// Which computed quantity a fixture cell pins down.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CellKey {
    SmallA { n: usize, m: usize },
    SmallB { n: usize, m: usize },
    SmallARowSum { n: usize },
    SmallBRowSum { n: usize },
    TripleA { n: usize, k: i64, a: usize, b: usize },
    TripleB { n: usize, k: i64, a: usize, b: usize },
    Comp { parts: Vec<usize> },
    AggA { n: usize, m: usize },
    AggB { n: usize, m: usize },
    QTan { n: usize },
    QSec { n: usize },
    Carlitz { n: usize, j: usize },
    CarlitzRefined { n: usize, k: usize, a: usize },
    Alpha { n: usize, m: usize },
    Beta { n: usize, m: usize },
    AlphaRowSum { n: usize },
    BetaRowSum { n: usize },
    Tangent { n: usize },
    Secant { n: usize },
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CellKey::*;
        match self {
            SmallA { n, m } => write!(f, "a({n},{m})"),
            SmallB { n, m } => write!(f, "b({n},{m})"),
            SmallARowSum { n } => write!(f, "Σ_m a({n},m)"),
            SmallBRowSum { n } => write!(f, "Σ_m b({n},m)"),
            TripleA { n, k, a, b } => write!(f, "A_{{{n},{k},{a},{b}}}"),
            TripleB { n, k, a, b } => write!(f, "B_{{{n},{k},{a},{b}}}"),
            Comp { parts } => {
                let n: usize = parts.iter().sum();
                let p: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "A_{{{n},({})}}", p.join(","))
            }
            AggA { n, m } => write!(f, "A_{{{n},a+b={m}}}"),
            AggB { n, m } => write!(f, "B_{{{n},a+b={m}}}"),
            QTan { n } => write!(f, "A_{n}(q)"),
            QSec { n } => write!(f, "A^Sec_{n}(q)"),
            Carlitz { n, j } => write!(f, "A_{{{n},{j}}}(q)"),
            CarlitzRefined { n, k, a } => write!(f, "A_{{{n},{k},{a}}}(q)"),
            Alpha { n, m } => write!(f, "α({n},{m})"),
            Beta { n, m } => write!(f, "β({n},{m})"),
            AlphaRowSum { n } => write!(f, "Σ_m α({n},m)"),
            BetaRowSum { n } => write!(f, "Σ_m β({n},m)"),
            Tangent { n } => write!(f, "T_{n}"),
            Secant { n } => write!(f, "E_{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCell {
    pub key: CellKey,
    pub expected: QPoly,
}

/// A printed table. `complete` tables also claim that every nonzero
/// computed entry in their range is printed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureTable {
    pub id: &'static str,
    pub cells: Vec<FixtureCell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fixtures {
    pub tables: Vec<FixtureTable>,
}

fn poly(s: &str) -> QPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("fixture {s:?} does not parse: {e}"))
}

fn table1() -> Vec<FixtureCell> {
    // Rows of the interleaved triangle, m = 0, 1, 2, ...: a(n,m) where
    // m ≡ n+1 (mod 2), b(n,m) elsewhere.
    const ROWS: [&[i64]; 7] = [
        &[1, 1],
        &[1, 1, 1],
        &[1, 2, 2, 2],
        &[2, 5, 8, 6, 6],
        &[5, 16, 28, 40, 24, 24],
        &[16, 61, 136, 180, 240, 120, 120],
        &[61, 272, 662, 1232, 1320, 1680, 720, 720],
    ];
    const A_SUMS: [i64; 7] = [1, 2, 4, 16, 80, 512, 3904];
    const B_SUMS: [i64; 7] = [1, 1, 3, 11, 57, 361, 2763];
    let mut cells = Vec::new();
    for (n, row) in ROWS.iter().enumerate() {
        for (m, &v) in row.iter().enumerate() {
            let key = if (n + m) % 2 == 1 {
                CellKey::SmallA { n, m }
            } else {
                CellKey::SmallB { n, m }
            };
            cells.push(FixtureCell {
                key,
                expected: QPoly::constant(v),
            });
        }
        cells.push(FixtureCell {
            key: CellKey::SmallARowSum { n },
            expected: QPoly::constant(A_SUMS[n]),
        });
        cells.push(FixtureCell {
            key: CellKey::SmallBRowSum { n },
            expected: QPoly::constant(B_SUMS[n]),
        });
    }
    cells
}

const TABLE2: &str = "
B 0 -1 0 0 1
A 0 0 1 0 1
A 1 0 0 0 1
B 1 0 1 0 1
A 1 0 1 1 1
B 2 0 0 0 1
A 2 0 0 1 1
A 2 1 1 0 q
B 2 0 1 1 1
B 2 1 2 0 q
A 2 0 1 2 1
A 2 1 2 1 q
A 3 1 0 0 q+q^2
B 3 0 0 1 1
B 3 1 0 1 q^2
B 3 1 1 0 2q+q^2
A 3 0 0 2 1
A 3 1 0 2 q^2
A 3 1 1 1 2q+2q^2
A 3 1 2 0 q
A 3 2 2 0 q^3
B 3 0 1 2 1
B 3 1 1 2 q^2
B 3 1 2 1 q+q^2
B 3 1 3 0 q
B 3 2 3 0 q^3
A 3 0 1 3 1
A 3 1 1 3 q^2
A 3 1 2 2 q+q^2
A 3 1 3 1 q
A 3 2 3 1 q^3
B 4 1 0 0 q+2q^2+q^3
B 4 2 0 0 q^4
A 4 1 0 1 q+3q^2+2q^3
A 4 1 1 0 q+q^2
A 4 2 0 1 q^4+q^5
A 4 2 1 0 2q^3+3q^4+q^5
B 4 0 0 2 1
B 4 1 0 2 2q^2+2q^3
B 4 1 1 1 2q+4q^2+2q^3
B 4 1 2 0 2q+q^2
B 4 2 0 2 q^5
B 4 2 1 1 2q^4+q^5
B 4 2 2 0 3q^3+4q^4+q^5
A 4 0 0 3 1
A 4 1 0 3 2q^2+2q^3
A 4 1 1 2 2q+5q^2+3q^3
A 4 1 2 1 2q+2q^2
A 4 1 3 0 q
A 4 2 0 3 q^5
A 4 2 1 2 2q^4+2q^5
A 4 2 2 1 3q^3+5q^4+2q^5
A 4 2 3 0 2q^3+2q^4
A 4 3 3 0 q^6
B 4 0 1 3 1
B 4 1 1 3 2q^2+2q^3
B 4 1 2 2 q+2q^2+q^3
B 4 1 3 1 q+q^2
B 4 1 4 0 q
B 4 2 1 3 q^5
B 4 2 2 2 q^4+q^5
B 4 2 3 1 q^3+2q^4+q^5
B 4 2 4 0 2q^3+2q^4
B 4 3 4 0 q^6
A 4 0 1 4 1
A 4 1 1 4 2q^2+2q^3
A 4 1 2 3 q+2q^2+q^3
A 4 1 3 2 q+q^2
A 4 1 4 1 q
A 4 2 1 4 q^5
A 4 2 2 3 q^4+q^5
A 4 2 3 2 q^3+2q^4+q^5
A 4 2 4 1 2q^3+2q^4
A 4 3 4 1 q^6
";

fn table2() -> Vec<FixtureCell> {
    TABLE2
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |i: usize| f[i].parse::<usize>().expect("index");
            let (n, k, a, b) = (num(1), f[2].parse::<i64>().expect("k"), num(3), num(4));
            let key = match f[0] {
                "A" => CellKey::TripleA { n, k, a, b },
                _ => CellKey::TripleB { n, k, a, b },
            };
            FixtureCell {
                key,
                expected: poly(f[5]),
            }
        })
        .collect()
}

// The cell printed as "A_{2(010)}" in the μ = 3 column is the composition
// (0,1,1,0).
const TABLE3: &[(&[usize], &str)] = &[
    (&[0, 0], "1"),
    (&[1], "1"),
    (&[0, 1, 0], "1"),
    (&[2, 0], "1"),
    (&[0, 2], "q"),
    (&[0, 1, 1, 0], "1+q"),
    (&[3], "q+q^2"),
    (&[2, 1, 0], "1+q+q^2"),
    (&[0, 1, 2], "q+q^2+q^3"),
    (&[0, 3, 0], "q+q^2"),
    (&[0, 1, 1, 1, 0], "(1+q)(1+q+q^2)"),
    (&[0, 4], "q^2+q^3+2q^4+q^5"),
    (&[2, 2], "(q+q^3)(1+q+q^2)"),
    (&[4, 0], "q+2q^2+q^3+q^4"),
    (&[0, 1, 1, 2], "(1+q+q^2)(q+q^2+q^3+q^4)"),
    (&[0, 1, 3, 0], "(q+q^2)(1+q+q^2+q^3)"),
    (&[0, 3, 1, 0], "(q+q^2)(1+q+q^2+q^3)"),
    (&[2, 1, 1, 0], "(1+q+q^2)(1+q+q^2+q^3)"),
    (&[0, 1, 1, 1, 1, 0], "(1+q)(1+q+q^2)(1+q+q^2+q^3)"),
];

fn table3() -> Vec<FixtureCell> {
    TABLE3
        .iter()
        .map(|(parts, p)| FixtureCell {
            key: CellKey::Comp {
                parts: parts.to_vec(),
            },
            expected: poly(p),
        })
        .collect()
}

const TABLE4: [&[&str]; 5] = [
    &["1", "1"],
    &["1", "1", "1"],
    &["1", "1+q", "1+q", "1+q"],
    &["q+q^2", "1+2q+2q^2", "1+3q+3q^2+q^3", "1+2q+2q^2+q^3", "1+2q+2q^2+q^3"],
    &[
        "q+2q^2+q^3+q^4",
        "2q+4q^2+4q^3+4q^4+2q^5",
        "1+4q+7q^2+7q^3+6q^4+3q^5",
        "1+5q+9q^2+10q^3+9q^4+5q^5+q^6",
        "1+3q+5q^2+6q^3+5q^4+3q^5+q^6",
        "1+3q+5q^2+6q^3+5q^4+3q^5+q^6",
    ],
];

fn table4() -> Vec<FixtureCell> {
    let mut cells = Vec::new();
    for (n, row) in TABLE4.iter().enumerate() {
        for (m, p) in row.iter().enumerate() {
            let key = if (n + m) % 2 == 1 {
                CellKey::AggA { n, m }
            } else {
                CellKey::AggB { n, m }
            };
            cells.push(FixtureCell {
                key,
                expected: poly(p),
            });
        }
    }
    cells
}

fn fig10_1() -> Vec<FixtureCell> {
    // Interleaved like the printed a/b triangle: α(n,m) where m ≡ n+1 (mod 2), β elsewhere.
    const ROWS: [&[i64]; 7] = [
        &[1, 1],
        &[1, 1, 1],
        &[1, 2, 1, 1],
        &[1, 2, 3, 1, 1],
        &[1, 3, 3, 4, 1, 1],
        &[1, 3, 6, 4, 5, 1, 1],
        &[1, 4, 6, 10, 5, 6, 1, 1],
    ];
    const ALPHA_SUMS: [i64; 7] = [1, 2, 3, 5, 8, 13, 21];
    const BETA_SUMS: [i64; 7] = [1, 1, 2, 3, 5, 8, 13];
    let mut cells = Vec::new();
    for (n, row) in ROWS.iter().enumerate() {
        for (m, &v) in row.iter().enumerate() {
            let key = if (n + m) % 2 == 1 {
                CellKey::Alpha { n, m }
            } else {
                CellKey::Beta { n, m }
            };
            cells.push(FixtureCell {
                key,
                expected: QPoly::constant(v),
            });
        }
        cells.push(FixtureCell {
            key: CellKey::AlphaRowSum { n },
            expected: QPoly::constant(ALPHA_SUMS[n]),
        });
        cells.push(FixtureCell {
            key: CellKey::BetaRowSum { n },
            expected: QPoly::constant(BETA_SUMS[n]),
        });
    }
    cells
}

fn q_tangent_values() -> Vec<FixtureCell> {
    // The printed A^Sec_0 = q is omitted: the constant term of Sec_q is 1.
    let tan = [
        (0, "1"),
        (1, "1"),
        (2, "1"),
        (3, "q+q^2"),
        (4, "q+2q^2+q^3+q^4"),
        (5, "q^2+2q^3+3q^4+4q^5+3q^6+2q^7+q^8"),
        (6, "q^2+3q^3+5q^4+8q^5+10q^6+10q^7+9q^8+7q^9+5q^10+2q^11+q^12"),
    ];
    let sec = [
        (2, "q"),
        (4, "q^2+q^3+2q^4+q^5"),
        (6, "q^3+2q^4+5q^5+7q^6+9q^7+10q^8+10q^9+8q^10+5q^11+3q^12+q^13"),
    ];
    tan.iter()
        .map(|&(n, p)| FixtureCell {
            key: CellKey::QTan { n },
            expected: poly(p),
        })
        .chain(sec.iter().map(|&(n, p)| FixtureCell {
            key: CellKey::QSec { n },
            expected: poly(p),
        }))
        .collect()
}

fn carlitz_values() -> Vec<FixtureCell> {
    let rows: [&[&str]; 6] = [
        &["1"],
        &["1"],
        &["1", "q"],
        &["1", "2q(q+1)", "q^3"],
        &["1", "q(3q^2+5q+3)", "q^3(3q^2+5q+3)", "q^6"],
        &[
            "1",
            "q(4q^3+9q^2+9q+4)",
            "q^3(6q^4+16q^3+22q^2+16q+6)",
            "q^6(4q^3+9q^2+9q+4)",
            "q^10",
        ],
    ];
    let refined: &[(usize, usize, usize, &str)] = &[
        (1, 0, 1, "1"),
        (2, 0, 1, "1"),
        (2, 1, 2, "q"),
        (3, 0, 1, "1"),
        (3, 1, 1, "q^2"),
        (3, 1, 2, "q+q^2"),
        (3, 1, 3, "q"),
        (3, 2, 3, "q^3"),
        (4, 0, 1, "1"),
        (4, 1, 1, "2q^2+2q^3"),
        (4, 1, 2, "q+2q^2+q^3"),
        (4, 1, 3, "q+q^2"),
        (4, 1, 4, "q"),
        (4, 2, 1, "q^5"),
        (4, 2, 2, "q^4+q^5"),
        (4, 2, 3, "q^3+2q^4+q^5"),
        (4, 2, 4, "2q^3+2q^4"),
        (4, 3, 4, "q^6"),
    ];
    let mut cells = Vec::new();
    for (n, row) in rows.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            cells.push(FixtureCell {
                key: CellKey::Carlitz { n, j },
                expected: poly(p),
            });
        }
    }
    for &(n, k, a, p) in refined {
        cells.push(FixtureCell {
            key: CellKey::CarlitzRefined { n, k, a },
            expected: poly(p),
        });
    }
    cells
}

fn classical_numbers() -> Vec<FixtureCell> {
    let tan = [(1, 1), (3, 2), (5, 16), (7, 272), (9, 7936)];
    let sec = [(0, 1), (2, 1), (4, 5), (6, 61), (8, 1385), (10, 50521)];
    tan.iter()
        .map(|&(n, v)| FixtureCell {
            key: CellKey::Tangent { n },
            expected: QPoly::constant(v),
        })
        .chain(sec.iter().map(|&(n, v)| FixtureCell {
            key: CellKey::Secant { n },
            expected: QPoly::constant(v),
        }))
        .collect()
}

pub const TABLE1: &str = "table1";
pub const TABLE2_ID: &str = "table2";
pub const TABLE3_ID: &str = "table3";
pub const TABLE4_ID: &str = "table4";
pub const FIG10_1: &str = "fig10.1";
pub const Q_TANGENT_VALUES: &str = "7.values";
pub const CARLITZ_VALUES: &str = "carlitz.values";
pub const CLASSICAL_NUMBERS: &str = "1.1-1.2";

impl Fixtures {
    /// The printed tables.
    pub fn printed() -> Self {
        Fixtures {
            tables: vec![
                FixtureTable { id: TABLE1, cells: table1() },
                FixtureTable { id: TABLE2_ID, cells: table2() },
                FixtureTable { id: TABLE3_ID, cells: table3() },
                FixtureTable { id: TABLE4_ID, cells: table4() },
                FixtureTable { id: FIG10_1, cells: fig10_1() },
                FixtureTable { id: Q_TANGENT_VALUES, cells: q_tangent_values() },
                FixtureTable { id: CARLITZ_VALUES, cells: carlitz_values() },
                FixtureTable { id: CLASSICAL_NUMBERS, cells: classical_numbers() },
            ],
        }
    }

    pub fn table(&self, id: &str) -> Option<&FixtureTable> {
        self.tables.iter().find(|t| t.id == id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.tables.iter().map(|t| t.id)
    }

    /// A copy with `q^power` added to one cell.
    pub fn bumped(&self, table: &str, cell: usize, power: usize) -> Option<Fixtures> {
        let mut out = self.clone();
        let t = out.tables.iter_mut().find(|t| t.id == table)?;
        let c = t.cells.get_mut(cell)?;
        c.expected += QPoly::q_pow(power);
        Some(out)
    }
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures::printed()
    }
}
