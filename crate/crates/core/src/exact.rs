//! Exact rational geometry: scalars, points, the three coordinate half-turns,
//! axis projections and degenerate-aware segment intersection.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number, always stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid coordinate string {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Lossy conversion, only for rendering.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Integer value if this rational is integral and fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `[+-]digits`, `[+-]digits.digits` and `[+-]digits/digits`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            input: s.to_string(),
            reason,
        };
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            Some(_) => (false, s),
            None => return Err(err("empty")),
        };
        let digits = |part: &str| -> Result<BigInt, ParseRationalError> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected decimal digits"));
            }
            part.parse::<BigInt>().map_err(|_| err("expected decimal digits"))
        };
        let value = if let Some((num, den)) = body.split_once('/') {
            let den = digits(den)?;
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            BigRational::new(digits(num)?, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let whole = digits(int)? * &scale + digits(frac)?;
            BigRational::new(whole, scale)
        } else {
            BigRational::from_integer(digits(body)?)
        };
        Ok(Rational(if negative { -value } else { value }))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// One of the three coordinate axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    /// True for the two strong-inversion axes, whose projections are intravergent.
    pub fn is_intravergent(self) -> bool {
        self != Axis::Z
    }

    /// +1 when the projection plane's (u, v) frame is positively oriented for a
    /// viewer on the positive side of the axis, -1 when it is mirrored.
    ///
    /// (y, z, x) is an even permutation of (x, y, z); (x, z, y) is odd.
    pub fn viewer_orientation(self) -> i32 {
        match self {
            Axis::X | Axis::Z => 1,
            Axis::Y => -1,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3::new(x.into(), y.into(), z.into())
    }

    pub fn origin() -> Self {
        Point3::default()
    }

    pub fn coord(&self, axis: Axis) -> &Rational {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    /// True if the point lies on the given coordinate axis.
    pub fn on_axis(&self, axis: Axis) -> bool {
        Axis::ALL
            .iter()
            .filter(|&&a| a != axis)
            .all(|&a| self.coord(a).is_zero())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Point3 {
        Point3::new(&self.x * factor, &self.y * factor, &self.z * factor)
    }

    fn sub(&self, other: &Point3) -> Vec3 {
        Vec3 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
            z: &self.z - &other.z,
        }
    }
}

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Half-turn about a coordinate axis.
pub fn half_turn(axis: Axis, p: &Point3) -> Point3 {
    match axis {
        Axis::X => Point3::new(p.x.clone(), -&p.y, -&p.z),
        Axis::Y => Point3::new(-&p.x, p.y.clone(), -&p.z),
        Axis::Z => Point3::new(-&p.x, -&p.y, p.z.clone()),
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point2 {
    pub u: Rational,
    pub v: Rational,
}

impl Point2 {
    pub fn new(u: Rational, v: Rational) -> Self {
        Point2 { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Point2::new(u.into(), v.into())
    }

    pub fn is_origin(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn to(&self, other: &Point2) -> Vec2 {
        Vec2::new(&other.u - &self.u, &other.v - &self.v)
    }

    pub fn offset(&self, d: &Vec2, t: &Rational) -> Point2 {
        Point2::new(&self.u + &(&d.u * t), &self.v + &(&d.v * t))
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// 2D direction vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vec2 {
    pub u: Rational,
    pub v: Rational,
}

impl Vec2 {
    pub fn new(u: Rational, v: Rational) -> Self {
        Vec2 { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Vec2::new(u.into(), v.into())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.u, -&self.v)
    }

    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.u * &other.v - &self.v * &other.u
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.u * &other.u + &self.v * &other.v
    }

    /// 0 for directions in the half-plane v > 0 or on the positive u-ray, 1 otherwise.
    fn half(&self) -> u8 {
        if self.v.is_positive() || (self.v.is_zero() && self.u.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Exact counterclockwise angular order starting at the positive u-axis.
    pub fn angle_cmp(&self, other: &Vec2) -> Ordering {
        self.half()
            .cmp(&other.half())
            .then_with(|| 0.cmp(&self.cross(other).signum()))
    }

    /// Same direction (parallel, same sense).
    pub fn codirectional(&self, other: &Vec2) -> bool {
        self.cross(other).is_zero() && self.dot(other).is_positive()
    }
}

/// A point projected onto a coordinate plane, with the dropped coordinate kept as depth.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point2WithDepth {
    pub u: Rational,
    pub v: Rational,
    pub depth: Rational,
}

impl Point2WithDepth {
    pub fn point(&self) -> Point2 {
        Point2::new(self.u.clone(), self.v.clone())
    }
}

/// Projection along `axis`: the axis coordinate becomes the depth, the other
/// two are kept in (x, y, z) order.
pub fn project(axis: Axis, p: &Point3) -> Point2WithDepth {
    let (u, v, depth) = match axis {
        Axis::Z => (&p.x, &p.y, &p.z),
        Axis::X => (&p.y, &p.z, &p.x),
        Axis::Y => (&p.x, &p.z, &p.y),
    };
    Point2WithDepth {
        u: u.clone(),
        v: v.clone(),
        depth: depth.clone(),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment2 {
    pub a: Point2,
    pub b: Point2,
}

impl Segment2 {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment2 { a, b }
    }

    pub fn direction(&self) -> Vec2 {
        self.a.to(&self.b)
    }

    pub fn translate(&self, d: &Vec2) -> Segment2 {
        let one = Rational::one();
        Segment2::new(self.a.offset(d, &one), self.b.offset(d, &one))
    }
}

/// Which endpoint of a segment an incidence touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Start,
    End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Disjoint,
    /// Proper crossing strictly inside both segments.
    TransverseInterior(Point2),
    /// Single common point that is an endpoint of at least one segment.
    EndpointIncidence {
        point: Point2,
        first: Option<End>,
        second: Option<End>,
    },
    /// Collinear with a common sub-segment of positive length.
    CollinearOverlap,
}

impl Classification {
    /// The same classification with the roles of the two segments exchanged.
    pub fn swapped(self) -> Classification {
        match self {
            Classification::EndpointIncidence { point, first, second } => Classification::EndpointIncidence {
                point,
                first: second,
                second: first,
            },
            other => other,
        }
    }
}

fn end_of(t: &Rational) -> Option<End> {
    if t.is_zero() {
        Some(End::Start)
    } else if *t == Rational::one() {
        Some(End::End)
    } else {
        None
    }
}

fn in_unit(t: &Rational) -> bool {
    !t.is_negative() && *t <= Rational::one()
}

/// Classifies the intersection of two non-degenerate closed segments exactly.
pub fn classify_intersection(s1: &Segment2, s2: &Segment2) -> Classification {
    let r = s1.direction();
    let s = s2.direction();
    debug_assert!(!r.is_zero() && !s.is_zero(), "degenerate segment");
    let qp = s1.a.to(&s2.a);
    let denom = r.cross(&s);
    if !denom.is_zero() {
        let t = qp.cross(&s) / &denom;
        let u = qp.cross(&r) / &denom;
        if !in_unit(&t) || !in_unit(&u) {
            return Classification::Disjoint;
        }
        let point = s1.a.offset(&r, &t);
        let (first, second) = (end_of(&t), end_of(&u));
        if first.is_none() && second.is_none() {
            Classification::TransverseInterior(point)
        } else {
            Classification::EndpointIncidence { point, first, second }
        }
    } else if !qp.cross(&r).is_zero() {
        Classification::Disjoint
    } else {
        // Collinear: parametrize s2's endpoints along s1.
        let rr = r.dot(&r);
        let t0 = qp.dot(&r) / &rr;
        let t1 = s1.a.to(&s2.b).dot(&r) / &rr;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let zero = Rational::zero();
        let one = Rational::one();
        if hi < zero || lo > one {
            Classification::Disjoint
        } else if hi == zero || lo == one {
            let t = if hi == zero { zero } else { one };
            let point = s1.a.offset(&r, &t);
            let second = if point == s2.a {
                Some(End::Start)
            } else {
                Some(End::End)
            };
            Classification::EndpointIncidence {
                point,
                first: end_of(&t),
                second,
            }
        } else {
            Classification::CollinearOverlap
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rays {0} and {1} are angularly coincident (tangency)")]
pub struct TangentRays(pub usize, pub usize);

/// Decides whether two strands through a common point cross rather than touch.
///
/// The rays considered are `-a1_in, a1_out` for strand 1 and `-a2_in, a2_out`
/// for strand 2; the strands cross iff these alternate in angular order.
pub fn rays_alternate(a1_in: &Vec2, a1_out: &Vec2, a2_in: &Vec2, a2_out: &Vec2) -> Result<bool, TangentRays> {
    let rays = [a1_in.neg(), a1_out.clone(), a2_in.neg(), a2_out.clone()];
    for i in 0..4 {
        for j in i + 1..4 {
            if rays[i].codirectional(&rays[j]) {
                return Err(TangentRays(i, j));
            }
        }
    }
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| rays[i].angle_cmp(&rays[j]));
    let strand = |i: usize| i / 2;
    Ok((0..4).all(|k| strand(order[k]) != strand(order[(k + 1) % 4])))
}

/// Side on which strand 2 leaves relative to strand 1 at a common point:
/// +1 if it crosses from right to left of strand 1, -1 otherwise.
///
/// Requires `rays_alternate` to hold; reduces to the sign of the cross
/// product of the two directions for straight strands.
pub fn crossing_side(a1_in: &Vec2, a1_out: &Vec2, a2_out: &Vec2) -> i32 {
    // Left of strand 1 is the open ccw sector from a1_out to -a1_in.
    let back = a1_in.neg();
    if ccw_from(a1_out, a2_out, &back) == Ordering::Less {
        1
    } else {
        -1
    }
}

/// Compares the ccw angles of `a` and `b` measured from `start`, in [0, 2pi).
fn ccw_from(start: &Vec2, a: &Vec2, b: &Vec2) -> Ordering {
    let half = |w: &Vec2| -> u8 {
        let c = start.cross(w);
        if c.is_positive() || (c.is_zero() && start.dot(w).is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b).signum()))
}

#[derive(Clone, Debug)]
struct Vec3 {
    x: Rational,
    y: Rational,
    z: Rational,
}

impl Vec3 {
    fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.y * &o.z - &self.z * &o.y,
            y: &self.z * &o.x - &self.x * &o.z,
            z: &self.x * &o.y - &self.y * &o.x,
        }
    }

    fn dot(&self, o: &Vec3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

/// True if the closed 3D segments `p0p1` and `q0q1` share at least one point.
pub fn segments_meet_3d(p0: &Point3, p1: &Point3, q0: &Point3, q1: &Point3) -> bool {
    let r = p1.sub(p0);
    let s = q1.sub(q0);
    let w = q0.sub(p0);
    let n = r.cross(&s);
    if !n.is_zero() {
        if !w.dot(&n).is_zero() {
            return false;
        }
        // Coplanar: project along an axis the plane is not parallel to.
        let axis = if !n.z.is_zero() {
            Axis::Z
        } else if !n.x.is_zero() {
            Axis::X
        } else {
            Axis::Y
        };
        let flat = |a: &Point3, b: &Point3| Segment2::new(project(axis, a).point(), project(axis, b).point());
        return classify_intersection(&flat(p0, p1), &flat(q0, q1)) != Classification::Disjoint;
    }
    if !w.cross(&r).is_zero() {
        return false;
    }
    let rr = r.dot(&r);
    let t0 = w.dot(&r) / &rr;
    let t1 = q1.sub(p0).dot(&r) / &rr;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    !(hi < Rational::zero() || lo > Rational::one())
}

/// Meeting of a closed 3D segment with a coordinate axis line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxisHit {
    None,
    Point(Point3),
    /// The segment runs along the axis.
    Contained,
}

pub fn segment_axis_hit(axis: Axis, p0: &Point3, p1: &Point3) -> AxisHit {
    let others: Vec<Axis> = Axis::ALL.into_iter().filter(|&a| a != axis).collect();
    let d = p1.sub(p0);
    let comp = |v: &Vec3, a: Axis| -> Rational {
        match a {
            Axis::X => v.x.clone(),
            Axis::Y => v.y.clone(),
            Axis::Z => v.z.clone(),
        }
    };
    let (a, b) = (others[0], others[1]);
    let (da, db) = (comp(&d, a), comp(&d, b));
    if da.is_zero() && db.is_zero() {
        return if p0.coord(a).is_zero() && p0.coord(b).is_zero() {
            AxisHit::Contained
        } else {
            AxisHit::None
        };
    }
    let t = if !da.is_zero() {
        -p0.coord(a) / &da
    } else {
        -p0.coord(b) / &db
    };
    if !in_unit(&t) {
        return AxisHit::None;
    }
    let at = |c: Axis| p0.coord(c) + &(&comp(&d, c) * &t);
    if !at(a).is_zero() || !at(b).is_zero() {
        return AxisHit::None;
    }
    AxisHit::Point(Point3::new(at(Axis::X), at(Axis::Y), at(Axis::Z)))
}
