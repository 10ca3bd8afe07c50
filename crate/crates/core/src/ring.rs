//! The ring of ternions: upper-triangular 2x2 matrices `[[a, b], [0, c]]`
//! over GF(q).
//!
//! Elements are addressed by their canonical encoding `a*q^2 + b*q + c`,
//! and both operation tables are stored over that encoding. The ring has
//! two maximal ideals, `I1` (`a = 0`) and `I2` (`c = 0`), whose
//! intersection is the Jacobson radical `J` (`a = c = 0`, squares to zero).

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::FieldCtx;

/// Largest field order for which the full operation tables are built.
pub const MAX_RING_FIELD_ORDER: u32 = 19;

/// One ternion `[[a, b], [0, c]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ternion {
    pub a: u8,
    pub b: u8,
    pub c: u8,
}

impl Ternion {
    pub const fn new(a: u8, b: u8, c: u8) -> Self {
        Ternion { a, b, c }
    }

    /// Inverse of the canonical encoding `a*q^2 + b*q + c`.
    pub fn from_code(q: u32, e: Elem) -> Self {
        let (q, e) = (q as u16, e);
        Ternion::new((e / (q * q)) as u8, ((e / q) % q) as u8, (e % q) as u8)
    }

    /// Label 0..=7 when the coordinates are binary.
    pub fn binary_label(self) -> Option<u8> {
        LABEL_COORDS.iter().position(|&t| t == self).map(|p| p as u8)
    }
}

impl fmt::Display for Ternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; 0 {}]", self.a, self.b, self.c)
    }
}

/// The three distinguished two-sided ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ideal {
    /// Vanishing top-left entry.
    I1,
    /// Vanishing bottom-right entry.
    I2,
    /// Jacobson radical, `I1 ∩ I2`.
    J,
}

/// Coordinates of the labels 0..=7 used for the order-eight ring.
const LABEL_COORDS: [Ternion; 8] = [
    Ternion::new(0, 0, 0),
    Ternion::new(1, 0, 1),
    Ternion::new(1, 1, 1),
    Ternion::new(1, 1, 0),
    Ternion::new(0, 0, 1),
    Ternion::new(1, 0, 0),
    Ternion::new(0, 1, 0),
    Ternion::new(0, 1, 1),
];

/// Element encoding inside a [`RingCtx`].
pub type Elem = u16;

/// Fully tabulated ring of ternions over GF(q).
#[derive(Debug, Clone)]
pub struct RingCtx {
    field: FieldCtx,
    size: usize,
    elements: Vec<Ternion>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    transpose: Vec<Elem>,
    unit: Vec<bool>,
    in_i1: Vec<bool>,
    in_i2: Vec<bool>,
    in_j: Vec<bool>,
    one: Elem,
}

/// Addition and multiplication tables in canonical encoding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationTables {
    pub order: usize,
    /// Row-major; `add[x * order + y]` is the encoding of `x + y`.
    pub add: Vec<Elem>,
    pub mul: Vec<Elem>,
}

impl OperationTables {
    pub fn add_at(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.order + y as usize]
    }

    pub fn mul_at(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.order + y as usize]
    }
}

/// An 8x8 operation table over the labels 0..=7.
pub type LabelTable = [[u8; 8]; 8];

impl RingCtx {
    pub fn new(q: u32) -> Result<Self> {
        let field = FieldCtx::new(q)?;
        if q > MAX_RING_FIELD_ORDER {
            return Err(Error::FieldTooLarge { q, max: MAX_RING_FIELD_ORDER });
        }
        let qq = q as usize;
        let size = qq * qq * qq;
        let elements: Vec<Ternion> = (0..size)
            .map(|e| Ternion::new((e / (qq * qq)) as u8, ((e / qq) % qq) as u8, (e % qq) as u8))
            .collect();
        let encode = |t: Ternion| (t.a as usize * qq * qq + t.b as usize * qq + t.c as usize) as Elem;

        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let sum = Ternion::new(field.add(x.a, y.a), field.add(x.b, y.b), field.add(x.c, y.c));
                // (a,b,c)(a',b',c') = (aa', ab' + bc', cc')
                let prod = Ternion::new(
                    field.mul(x.a, y.a),
                    field.add(field.mul(x.a, y.b), field.mul(x.b, y.c)),
                    field.mul(x.c, y.c),
                );
                add[i * size + j] = encode(sum);
                mul[i * size + j] = encode(prod);
            }
        }
        let transpose = elements.iter().map(|t| encode(Ternion::new(t.c, t.b, t.a))).collect();
        let unit = elements.iter().map(|t| t.a != 0 && t.c != 0).collect();
        let in_i1 = elements.iter().map(|t| t.a == 0).collect();
        let in_i2 = elements.iter().map(|t| t.c == 0).collect();
        let in_j = elements.iter().map(|t| t.a == 0 && t.c == 0).collect();
        let one = encode(Ternion::new(1, 0, 1));

        let ring = RingCtx { field, size, elements, add, mul, transpose, unit, in_i1, in_i2, in_j, one };
        ring.cross_check_units();
        Ok(ring)
    }

    // The diagonal predicate must agree with a two-sided inverse search in the table.
    fn cross_check_units(&self) {
        for x in 0..self.size as Elem {
            let invertible = (0..self.size as Elem)
                .any(|y| self.mul_enc(x, y) == self.one && self.mul_enc(y, x) == self.one);
            assert_eq!(invertible, self.unit[x as usize], "unit predicate disagrees with table at {x}");
        }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// Order q of the base field.
    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// Number of ring elements, q^3.
    pub fn order(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> &[Ternion] {
        &self.elements
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn encode(&self, t: Ternion) -> Elem {
        let q = self.q() as usize;
        (t.a as usize * q * q + t.b as usize * q + t.c as usize) as Elem
    }

    pub fn decode(&self, e: Elem) -> Ternion {
        self.elements[e as usize]
    }

    /// Checks that every coordinate of `t` is a residue of the base field.
    pub fn validate(&self, t: Ternion) -> Result<Ternion> {
        for v in [t.a, t.b, t.c] {
            if !self.field.contains(v) {
                return Err(Error::InvalidResidue { value: v as u32, q: self.q() });
            }
        }
        Ok(t)
    }

    #[inline]
    pub fn add_enc(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn mul_enc(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.size + y as usize]
    }

    pub fn add(&self, x: Ternion, y: Ternion) -> Ternion {
        self.decode(self.add_enc(self.encode(x), self.encode(y)))
    }

    pub fn mul(&self, x: Ternion, y: Ternion) -> Ternion {
        self.decode(self.mul_enc(self.encode(x), self.encode(y)))
    }

    #[inline]
    pub fn is_unit_enc(&self, x: Elem) -> bool {
        self.unit[x as usize]
    }

    pub fn is_unit(&self, x: Ternion) -> bool {
        x.a != 0 && x.c != 0
    }

    /// Two-sided inverse of a unit.
    pub fn inverse(&self, x: Ternion) -> Option<Ternion> {
        if !self.is_unit(x) {
            return None;
        }
        let f = &self.field;
        let ia = f.inv(x.a).ok()?;
        let ic = f.inv(x.c).ok()?;
        // [[a,b],[0,c]]^-1 = [[1/a, -b/(ac)], [0, 1/c]]
        let b = f.neg(f.mul(f.mul(x.b, ia), ic));
        Some(Ternion::new(ia, b, ic))
    }

    /// The anti-automorphism `(a, b, c) -> (c, b, a)`.
    pub fn transpose(&self, x: Ternion) -> Ternion {
        Ternion::new(x.c, x.b, x.a)
    }

    #[inline]
    pub fn transpose_enc(&self, x: Elem) -> Elem {
        self.transpose[x as usize]
    }

    #[inline]
    pub fn in_ideal_enc(&self, ideal: Ideal, x: Elem) -> bool {
        match ideal {
            Ideal::I1 => self.in_i1[x as usize],
            Ideal::I2 => self.in_i2[x as usize],
            Ideal::J => self.in_j[x as usize],
        }
    }

    pub fn in_ideal(&self, ideal: Ideal, x: Ternion) -> bool {
        self.in_ideal_enc(ideal, self.encode(x))
    }

    /// Members of an ideal in encoding order.
    pub fn ideal_members(&self, ideal: Ideal) -> Vec<Elem> {
        (0..self.size as Elem).filter(|&x| self.in_ideal_enc(ideal, x)).collect()
    }

    pub fn units(&self) -> Vec<Elem> {
        (0..self.size as Elem).filter(|&x| self.is_unit_enc(x)).collect()
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        (0..self.size as Elem).filter(|&x| self.mul_enc(x, x) == x).collect()
    }

    /// Elements with some power equal to zero.
    pub fn nilpotents(&self) -> Vec<Elem> {
        (0..self.size as Elem)
            .filter(|&x| {
                let mut p = x;
                for _ in 0..self.size {
                    if p == 0 {
                        return true;
                    }
                    p = self.mul_enc(p, x);
                }
                p == 0
            })
            .collect()
    }

    pub fn tables(&self) -> OperationTables {
        OperationTables { order: self.size, add: self.add.clone(), mul: self.mul.clone() }
    }

    /// Label 0..=7 of an element of the order-eight ring.
    pub fn paper_label(&self, x: Ternion) -> Result<u8> {
        if self.q() != 2 {
            return Err(Error::LabelsUnavailable(self.q()));
        }
        self.validate(x)?;
        Ok(LABEL_COORDS.iter().position(|&t| t == x).unwrap() as u8)
    }

    pub fn paper_unlabel(&self, label: u8) -> Result<Ternion> {
        if self.q() != 2 {
            return Err(Error::LabelsUnavailable(self.q()));
        }
        LABEL_COORDS.get(label as usize).copied().ok_or(Error::InvalidLabel(label))
    }

    pub fn label_enc(&self, x: Elem) -> Result<u8> {
        self.paper_label(self.decode(x))
    }

    pub fn unlabel_enc(&self, label: u8) -> Result<Elem> {
        self.paper_unlabel(label).map(|t| self.encode(t))
    }

    /// Both tables rendered over labels, rows and columns in label order.
    pub fn paper_label_tables(&self) -> Result<(LabelTable, LabelTable)> {
        let mut add = [[0u8; 8]; 8];
        let mut mul = [[0u8; 8]; 8];
        for i in 0..8u8 {
            for j in 0..8u8 {
                let x = self.unlabel_enc(i)?;
                let y = self.unlabel_enc(j)?;
                add[i as usize][j as usize] = self.label_enc(self.add_enc(x, y))?;
                mul[i as usize][j as usize] = self.label_enc(self.mul_enc(x, y))?;
            }
        }
        Ok((add, mul))
    }
}
