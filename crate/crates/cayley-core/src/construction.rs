//! The concrete permutations of `H` that define the graph family: the
//! automorphism `x`, the automorphism `tau` of `K`, the permutations `y` and
//! `z`, and the right regular representation `R`.
//!
//! All tables are materialized eagerly at full degree `2^m`; every downstream
//! check walks the whole domain anyway, and whole-table equality keeps the
//! verification logic trivial.

use crate::halg::{floor_div_2, HElement, HParams};
use crate::perm::{Parity, Permutation};
use crate::{Error, Result};

/// Extends generator images `a -> a_img`, `b -> b_img`, `c_i -> c_imgs[i-1]`
/// to the full permutation table of an automorphism of `H`.
///
/// The images must satisfy the defining relations (`a_img` of order 4,
/// `b_img` and the `c_imgs` involutions, `(a_img b_img)^2 = 1`, `c_imgs`
/// central); the multiplicative extension is then a homomorphism, and
/// bijectivity of the resulting table makes it an automorphism.
pub fn extend_automorphism(
    params: &HParams,
    a_img: HElement,
    b_img: HElement,
    c_imgs: &[HElement],
) -> Result<Permutation> {
    if c_imgs.len() != params.c_rank() as usize {
        return Err(Error::BadGeneratorImages(format!(
            "expected {} c-images, got {}",
            params.c_rank(),
            c_imgs.len()
        )));
    }
    if a_img.order() != 4 {
        return Err(Error::BadGeneratorImages(format!(
            "image of a must have order 4, got {a_img}"
        )));
    }
    if b_img.order() != 2 {
        return Err(Error::BadGeneratorImages(format!(
            "image of b must be an involution, got {b_img}"
        )));
    }
    let ab_img = a_img.mul(&b_img)?;
    if ab_img.order() != 2 {
        return Err(Error::BadGeneratorImages(format!(
            "(ab)-image must be an involution, got {ab_img}"
        )));
    }
    for (i, c_img) in c_imgs.iter().enumerate() {
        if !(c_img.is_central() && c_img.order() == 2) {
            return Err(Error::BadGeneratorImages(format!(
                "image of c{} must be a central involution, got {c_img}",
                i + 1
            )));
        }
    }

    let a_pows = [
        params.identity(),
        a_img,
        a_img.mul(&a_img)?,
        a_img.mul(&a_img)?.mul(&a_img)?,
    ];
    let mut images = Vec::with_capacity(params.group_order());
    for g in params.enumerate() {
        let mut img = a_pows[g.a_exp() as usize];
        if g.b_exp() == 1 {
            img = img.mul(&b_img)?;
        }
        for i in 0..params.c_rank() {
            if g.c_bits() >> i & 1 == 1 {
                img = img.mul(&c_imgs[i as usize])?;
            }
        }
        images.push(img.index() as u32);
    }
    Permutation::new(images).map_err(|_| {
        Error::BadGeneratorImages("generator images do not extend to a bijection".into())
    })
}

/// Builds the automorphism `x` of `H`:
///
/// ```text
/// a -> a^{-1},  b -> ab,
/// c_{2i+1} -> c_{2i+1},  c_{2i+2} -> a^2 c_{2i+1} c_{2i+2}   (0 <= i <= floor((m-5)/2))
/// c_{m-3} -> a^2 c_{m-3}                                     (m even)
/// ```
pub fn build_x(params: &HParams) -> Result<Permutation> {
    let a = params.gen_a();
    let a2 = a.mul(&a)?;
    let mut c_imgs = vec![params.identity(); params.c_rank() as usize];
    for i in 0..=floor_div_2(params.m() as i64 - 5) {
        let odd = (2 * i + 1) as usize;
        let even = (2 * i + 2) as usize;
        c_imgs[odd - 1] = params.gen_c(odd as u32)?;
        c_imgs[even - 1] = params
            .product(&[a2, params.gen_c(odd as u32)?, params.gen_c(even as u32)?])?;
    }
    if params.is_even_m() {
        let top = params.c_rank();
        c_imgs[top as usize - 1] = a2.mul(&params.gen_c(top)?)?;
    }
    let x = extend_automorphism(params, a.inv(), a.mul(&params.gen_b())?, &c_imgs)?;
    debug_assert!(x.compose(&x)?.is_identity());
    debug_assert_eq!(x.image_of(0), 0);
    Ok(x)
}

/// The automorphism `tau` of `K = <a^2, b, c_1, …, c_{m-3}>`, defined exactly
/// on `K`:
///
/// ```text
/// a^2 -> b,  b -> a^2,
/// c_{2i+1} -> c_{2i-1} c_{2i} c_{2i+2},  c_{2i+2} -> c_{2i-1} c_{2i} c_{2i+1}
///                                                    (0 <= i <= floor((m-5)/2))
/// c_{m-3} -> c_{m-3}                                 (m even)
/// ```
///
/// with `c_0 = c_{-1} = 1`.
pub struct KAutomorphism {
    params: HParams,
    // Indexed by element index; None outside K.
    images: Vec<Option<u32>>,
}

impl KAutomorphism {
    pub fn params(&self) -> HParams {
        self.params
    }

    /// Image of a `K`-element; elements outside `K` are rejected.
    pub fn apply(&self, g: &HElement) -> Result<HElement> {
        match self.images.get(g.index()).copied().flatten() {
            Some(idx) => self.params.decode(idx as usize),
            None => Err(Error::OutsideK(g.to_string())),
        }
    }
}

pub fn build_tau(params: &HParams) -> Result<KAutomorphism> {
    let a2 = params.gen_a().mul(&params.gen_a())?;
    let b = params.gen_b();
    let mut c_imgs = vec![params.identity(); params.c_rank() as usize];
    for i in 0..=floor_div_2(params.m() as i64 - 5) {
        let odd = 2 * i + 1;
        let even = 2 * i + 2;
        c_imgs[odd as usize - 1] = params.product(&[
            params.c_or_identity(2 * i - 1)?,
            params.c_or_identity(2 * i)?,
            params.gen_c(even as u32)?,
        ])?;
        c_imgs[even as usize - 1] = params.product(&[
            params.c_or_identity(2 * i - 1)?,
            params.c_or_identity(2 * i)?,
            params.gen_c(odd as u32)?,
        ])?;
    }
    if params.is_even_m() {
        let top = params.c_rank();
        c_imgs[top as usize - 1] = params.gen_c(top)?;
    }

    // Extend linearly over the GF(2)-space K with basis {a^2, b, c_1, ...}.
    let mut images = vec![None; params.group_order()];
    let mut assigned = vec![false; params.group_order()];
    for g in params.enumerate().filter(HElement::in_k) {
        let mut img = params.identity();
        if g.a_exp() == 2 {
            img = img.mul(&b)?; // (a^2)^tau = b
        }
        if g.b_exp() == 1 {
            img = img.mul(&a2)?; // b^tau = a^2
        }
        for i in 0..params.c_rank() {
            if g.c_bits() >> i & 1 == 1 {
                img = img.mul(&c_imgs[i as usize])?;
            }
        }
        if !img.in_k() || assigned[img.index()] {
            return Err(Error::BadGeneratorImages(
                "tau images do not extend to a bijection of K".into(),
            ));
        }
        assigned[img.index()] = true;
        images[g.index()] = Some(img.index() as u32);
    }

    let tau = KAutomorphism { params: *params, images };
    // tau is an involution of K; cheap to confirm on the whole domain.
    for g in params.enumerate().filter(HElement::in_k) {
        if tau.apply(&tau.apply(&g)?)? != g {
            return Err(Error::BadGeneratorImages("tau is not an involution".into()));
        }
    }
    Ok(tau)
}

/// The permutation `y` of `H`: `k^y = k^tau` on `K`, and on the coset `hK`
///
/// ```text
/// (hk)^y = h k^tau            (m odd)
/// (hk)^y = h k^tau c_{m-3}    (m even)
/// ```
pub fn build_y(params: &HParams) -> Result<Permutation> {
    let tau = build_tau(params)?;
    build_y_with_tau(params, &tau)
}

pub fn build_y_with_tau(params: &HParams, tau: &KAutomorphism) -> Result<Permutation> {
    let h = params.h_element();
    let h_inv = h.inv();
    let c_top = params.gen_c(params.c_rank())?;
    let mut images = Vec::with_capacity(params.group_order());
    for g in params.enumerate() {
        let img = if g.in_k() {
            tau.apply(&g)?
        } else {
            let k = h_inv.mul(&g)?;
            let mut img = h.mul(&tau.apply(&k)?)?;
            if params.is_even_m() {
                img = img.mul(&c_top)?;
            }
            img
        };
        images.push(img.index() as u32);
    }
    let y = Permutation::new(images)?;
    debug_assert!(y.compose(&y)?.is_identity());
    debug_assert_eq!(y.image_of(0), 0);
    Ok(y)
}

/// The right translation `R(g): p -> p * g`.
pub fn right_translation(params: &HParams, g: &HElement) -> Permutation {
    let images: Vec<u32> = params
        .enumerate()
        .map(|p| p.mul(g).expect("same parameters").index() as u32)
        .collect();
    Permutation::new(images).expect("right translation is a bijection")
}

/// The permutation `z`:
///
/// ```text
/// z = R(h) y R(h^{-1})            (m odd)
/// z = R(h) y R(h^{-1} c_{m-3})    (m even)
/// ```
pub fn build_z(params: &HParams, y: &Permutation) -> Result<Permutation> {
    let h = params.h_element();
    let left = right_translation(params, &h);
    let mut tail = h.inv();
    if params.is_even_m() {
        tail = tail.mul(&params.gen_c(params.c_rank())?)?;
    }
    let right = right_translation(params, &tail);
    let z = left.compose(y)?.compose(&right)?;
    debug_assert!(z.compose(&z)?.is_identity());
    debug_assert_eq!(z.image_of(0), 0);
    Ok(z)
}

/// The labeled right-regular generators `R(a), R(b), R(c_1), …, R(c_{m-3})`.
pub fn regular_gens(params: &HParams) -> Vec<(String, Permutation)> {
    let mut gens = vec![
        ("R(a)".to_string(), right_translation(params, &params.gen_a())),
        ("R(b)".to_string(), right_translation(params, &params.gen_b())),
    ];
    for i in 1..=params.c_rank() {
        let c = params.gen_c(i).expect("index in range");
        gens.push((format!("R(c{i})"), right_translation(params, &c)));
    }
    gens
}

/// The connection set `{x, y, z}`, validated: three pairwise-distinct
/// nontrivial involutions all fixing point 0. Any violation would falsify
/// the construction itself and is treated as fatal.
pub struct ConnectionSet {
    pub x: Permutation,
    pub y: Permutation,
    pub z: Permutation,
}

impl ConnectionSet {
    pub fn gens(&self) -> [(&'static str, &Permutation); 3] {
        [("x", &self.x), ("y", &self.y), ("z", &self.z)]
    }
}

pub fn connection_set(params: &HParams) -> Result<ConnectionSet> {
    let x = build_x(params)?;
    let y = build_y(params)?;
    let z = build_z(params, &y)?;
    validate_connection_set(&x, &y, &z)?;
    Ok(ConnectionSet { x, y, z })
}

fn validate_connection_set(x: &Permutation, y: &Permutation, z: &Permutation) -> Result<()> {
    for (name, p) in [("x", x), ("y", y), ("z", z)] {
        if p.is_identity() {
            return Err(Error::DegenerateConnectionSet(format!("{name} is trivial")));
        }
        if !p.compose(p)?.is_identity() {
            return Err(Error::DegenerateConnectionSet(format!("{name} is not an involution")));
        }
        if p.image_of(0) != 0 {
            return Err(Error::DegenerateConnectionSet(format!("{name} moves the identity point")));
        }
    }
    if x == y || y == z || x == z {
        return Err(Error::DegenerateConnectionSet("generators coincide".into()));
    }
    Ok(())
}

/// One fully-built instance of the construction at a given `m`: the
/// connection set, `tau`, and the labeled regular generators.
pub struct Instance {
    params: HParams,
    conn: ConnectionSet,
    tau: KAutomorphism,
    r_gens: Vec<(String, Permutation)>,
}

impl Instance {
    pub fn new(m: u32) -> Result<Instance> {
        let params = HParams::new(m)?;
        let x = build_x(&params)?;
        let tau = build_tau(&params)?;
        let y = build_y_with_tau(&params, &tau)?;
        let z = build_z(&params, &y)?;
        validate_connection_set(&x, &y, &z)?;
        Ok(Instance {
            params,
            conn: ConnectionSet { x, y, z },
            tau,
            r_gens: regular_gens(&params),
        })
    }

    pub fn params(&self) -> &HParams {
        &self.params
    }

    pub fn degree(&self) -> usize {
        self.params.group_order()
    }

    pub fn x(&self) -> &Permutation {
        &self.conn.x
    }

    pub fn y(&self) -> &Permutation {
        &self.conn.y
    }

    pub fn z(&self) -> &Permutation {
        &self.conn.z
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.conn
    }

    pub fn tau(&self) -> &KAutomorphism {
        &self.tau
    }

    pub fn r_gens(&self) -> &[(String, Permutation)] {
        &self.r_gens
    }

    pub fn r_of(&self, g: &HElement) -> Permutation {
        right_translation(&self.params, g)
    }

    /// Element-level application of one of the tables.
    pub fn apply(&self, table: &Permutation, g: &HElement) -> HElement {
        self.params
            .decode(table.image_of(g.index()))
            .expect("image in range")
    }

    pub fn x_img(&self, g: &HElement) -> HElement {
        self.apply(&self.conn.x, g)
    }

    pub fn y_img(&self, g: &HElement) -> HElement {
        self.apply(&self.conn.y, g)
    }

    pub fn z_img(&self, g: &HElement) -> HElement {
        self.apply(&self.conn.z, g)
    }

    /// Evaluates a word over the letters `x`, `y`, `z` to a full permutation.
    pub fn word_permutation(&self, word: &str) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for letter in word.chars() {
            let table = match letter {
                'x' => &self.conn.x,
                'y' => &self.conn.y,
                'z' => &self.conn.z,
                other => panic!("unknown generator letter {other:?}"),
            };
            acc = acc.compose(table).expect("equal degrees");
        }
        acc
    }

    /// Falsification control: returns the instance with two entries of the
    /// `y` table swapped. The result is still a permutation but no longer an
    /// involution fixing 0, so every downstream check must flip to fail.
    pub fn with_corrupted_y(mut self) -> Instance {
        let mut images = self.conn.y.images().to_vec();
        images.swap(0, 1);
        self.conn.y = Permutation::new(images).expect("swap preserves bijectivity");
        self
    }

    /// Applies a word over the letters `x`, `y`, `z` to an element, left to
    /// right.
    pub fn apply_word(&self, word: &str, g: &HElement) -> HElement {
        let mut point = g.index();
        for letter in word.chars() {
            let table = match letter {
                'x' => &self.conn.x,
                'y' => &self.conn.y,
                'z' => &self.conn.z,
                other => panic!("unknown generator letter {other:?}"),
            };
            point = table.image_of(point);
        }
        self.params.decode(point).expect("image in range")
    }

    /// `x, y, z` and the regular generators, labeled, as one generating set
    /// for the full group `<x, y, R(H)>`.
    pub fn full_generating_set(&self) -> Vec<(String, Permutation)> {
        let mut gens = vec![
            ("x".to_string(), self.conn.x.clone()),
            ("y".to_string(), self.conn.y.clone()),
        ];
        gens.extend(self.r_gens.iter().cloned());
        gens
    }
}

/// Parity of every generator in sight; used by the containment checks.
pub fn generator_parities(inst: &Instance) -> Vec<(String, Parity)> {
    let mut out = vec![
        ("x".to_string(), inst.x().parity()),
        ("y".to_string(), inst.y().parity()),
        ("z".to_string(), inst.z().parity()),
    ];
    for (label, p) in inst.r_gens() {
        out.push((label.clone(), p.parity()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32) -> HParams {
        HParams::new(m).unwrap()
    }

    #[test]
    fn x_on_c1_at_m4() {
        let p = params(4);
        let x = build_x(&p).unwrap();
        let c1 = p.gen_c(1).unwrap();
        let a2c1 = p.product(&[p.gen_a(), p.gen_a(), c1]).unwrap();
        assert_eq!(x.image_of(c1.index()), a2c1.index());
        assert_eq!(x.image_of(0), 0);
    }

    #[test]
    fn x_maps_ab_to_b() {
        for m in 4..=9 {
            let p = params(m);
            let x = build_x(&p).unwrap();
            let ab = p.gen_a().mul(&p.gen_b()).unwrap();
            assert_eq!(x.image_of(ab.index()), p.gen_b().index(), "(ab)^x = b at m={m}");
        }
    }

    #[test]
    fn tau_generator_images() {
        let p5 = params(5);
        let tau5 = build_tau(&p5).unwrap();
        assert_eq!(tau5.apply(&p5.gen_c(1).unwrap()).unwrap(), p5.gen_c(2).unwrap());
        let a2 = p5.gen_a().mul(&p5.gen_a()).unwrap();
        assert_eq!(tau5.apply(&a2).unwrap(), p5.gen_b());

        let p4 = params(4);
        let tau4 = build_tau(&p4).unwrap();
        assert_eq!(tau4.apply(&p4.gen_c(1).unwrap()).unwrap(), p4.gen_c(1).unwrap());

        assert!(tau5.apply(&p5.gen_a()).is_err());
    }

    #[test]
    fn y_images() {
        let p5 = params(5);
        let y5 = build_y(&p5).unwrap();
        assert_eq!(
            y5.image_of(p5.gen_c(1).unwrap().index()),
            p5.gen_c(2).unwrap().index()
        );
        assert_eq!(y5.image_of(0), 0);

        // m = 4: a = h*c1, k = c1, tau(c1) = c1, appended c1 gives a*c1.
        let p4 = params(4);
        let y4 = build_y(&p4).unwrap();
        let ac1 = p4.gen_a().mul(&p4.gen_c(1).unwrap()).unwrap();
        assert_eq!(y4.image_of(p4.gen_a().index()), ac1.index());
    }

    #[test]
    fn y_restricted_to_k_is_tau_and_preserves_cosets() {
        for m in 4..=7 {
            let p = params(m);
            let tau = build_tau(&p).unwrap();
            let y = build_y_with_tau(&p, &tau).unwrap();
            for g in p.enumerate() {
                if g.in_k() {
                    assert_eq!(y.image_of(g.index()), tau.apply(&g).unwrap().index());
                } else {
                    let img = p.decode(y.image_of(g.index())).unwrap();
                    assert!(!img.in_k(), "y must map hK into hK (m={m})");
                }
            }
        }
    }

    #[test]
    fn z_matches_its_pointwise_formula() {
        for m in 4..=7 {
            let p = params(m);
            let y = build_y(&p).unwrap();
            let z = build_z(&p, &y).unwrap();
            let h = p.h_element();
            let c_top = p.gen_c(p.c_rank()).unwrap();
            for g in p.enumerate() {
                let gh = g.mul(&h).unwrap();
                let mut expect = p.decode(y.image_of(gh.index())).unwrap().mul(&h.inv()).unwrap();
                if p.is_even_m() {
                    expect = expect.mul(&c_top).unwrap();
                }
                assert_eq!(z.image_of(g.index()), expect.index(), "z formula at m={m}");
            }
        }
    }

    #[test]
    fn z_sends_c2_to_c1_at_m5() {
        let p = params(5);
        let y = build_y(&p).unwrap();
        let z = build_z(&p, &y).unwrap();
        assert_eq!(
            z.image_of(p.gen_c(2).unwrap().index()),
            p.gen_c(1).unwrap().index()
        );
        assert_eq!(z.image_of(0), 0);
    }

    #[test]
    fn regular_representation_basics() {
        let p = params(4);
        let id = right_translation(&p, &p.identity());
        assert!(id.is_identity());
        let ra = right_translation(&p, &p.gen_a());
        assert_eq!(ra.image_of(0), p.gen_a().index());
        assert_eq!(ra.parity(), Parity::Even);
        assert!(ra.cycle_decomposition().cycles().iter().all(|c| c.len() == 4));
        assert_eq!(regular_gens(&p).len(), 3);
    }

    #[test]
    fn connection_set_is_three_distinct_even_involutions() {
        for m in 4..=8 {
            let conn = connection_set(&params(m)).unwrap();
            for (name, g) in conn.gens() {
                assert!(!g.is_identity(), "{name} trivial at m={m}");
                assert!(g.compose(g).unwrap().is_identity(), "{name}^2 != 1 at m={m}");
                assert_eq!(g.image_of(0), 0);
                assert_eq!(g.parity(), Parity::Even, "{name} odd at m={m}");
            }
            assert_ne!(conn.x, conn.y);
            assert_ne!(conn.y, conn.z);
            assert_ne!(conn.x, conn.z);
        }
    }

    #[test]
    fn x_is_a_homomorphism_exhaustively_small_m() {
        for m in 4..=6 {
            let p = params(m);
            let x = build_x(&p).unwrap();
            for g1 in p.enumerate() {
                for g2 in p.enumerate() {
                    let lhs = p.decode(x.image_of(g1.mul(&g2).unwrap().index())).unwrap();
                    let rhs = p
                        .decode(x.image_of(g1.index()))
                        .unwrap()
                        .mul(&p.decode(x.image_of(g2.index())).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "x not a homomorphism at m={m}");
                }
            }
        }
    }

    #[test]
    fn x_normalizes_r_and_y_conjugates_r_k_by_tau() {
        for m in 4..=6 {
            let inst = Instance::new(m).unwrap();
            let p = *inst.params();
            // x^{-1} R(g) x = R(g^x) on the group generators.
            let mut named = vec![p.gen_a(), p.gen_b()];
            for i in 1..=p.c_rank() {
                named.push(p.gen_c(i).unwrap());
            }
            for g in &named {
                let conj = inst
                    .x()
                    .inverse()
                    .compose(&inst.r_of(g))
                    .unwrap()
                    .compose(inst.x())
                    .unwrap();
                assert_eq!(conj, inst.r_of(&inst.x_img(g)), "x normalizes R(H) at m={m}");
            }
            // y^{-1} R(k) y = R(k^tau) on generators of K.
            let a2 = p.gen_a().mul(&p.gen_a()).unwrap();
            let mut k_gens = vec![a2, p.gen_b()];
            for i in 1..=p.c_rank() {
                k_gens.push(p.gen_c(i).unwrap());
            }
            for k in &k_gens {
                let conj = inst
                    .y()
                    .inverse()
                    .compose(&inst.r_of(k))
                    .unwrap()
                    .compose(inst.y())
                    .unwrap();
                let tau_k = inst.tau().apply(k).unwrap();
                assert_eq!(conj, inst.r_of(&tau_k), "y conjugates R(K) by tau at m={m}");
            }
        }
    }

    #[test]
    fn u_is_stabilized_by_x_for_odd_m() {
        for m in [5u32, 7] {
            let inst = Instance::new(m).unwrap();
            for u in inst.params().enumerate().filter(HElement::in_u) {
                assert!(inst.x_img(&u).in_u(), "x must stabilize U at m={m}");
            }
        }
    }

    #[test]
    fn extend_automorphism_rejects_bad_images() {
        let p = params(4);
        // a's image must have order 4.
        assert!(extend_automorphism(&p, p.gen_b(), p.gen_b(), &[p.gen_c(1).unwrap()]).is_err());
        // c's image must be central.
        assert!(extend_automorphism(&p, p.gen_a(), p.gen_b(), &[p.gen_b()]).is_err());
        // Non-bijective assignment: c1 -> a^2 collides with a^2's image.
        let a2 = p.gen_a().mul(&p.gen_a()).unwrap();
        assert!(extend_automorphism(&p, p.gen_a(), p.gen_b(), &[a2]).is_err());
    }
}
