use std::fmt;

use serde::{Deserialize, Serialize};

/// Generators of SU_q(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Alpha,
    AlphaStar,
    Gamma,
    GammaStar,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Alpha, Generator::AlphaStar, Generator::Gamma, Generator::GammaStar];

    pub fn star(self) -> Self {
        match self {
            Generator::Alpha => Generator::AlphaStar,
            Generator::AlphaStar => Generator::Alpha,
            Generator::Gamma => Generator::GammaStar,
            Generator::GammaStar => Generator::Gamma,
        }
    }

    pub fn degree(self) -> i32 {
        match self {
            Generator::Alpha | Generator::Gamma => 1,
            Generator::AlphaStar | Generator::GammaStar => -1,
        }
    }

    pub fn monomial(self) -> Monomial {
        match self {
            Generator::Alpha => Monomial::new(1, 0, 0),
            Generator::AlphaStar => Monomial::new(-1, 0, 0),
            Generator::Gamma => Monomial::new(0, 1, 0),
            Generator::GammaStar => Monomial::new(0, 0, 1),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Alpha => "alpha",
            Generator::AlphaStar => "alpha*",
            Generator::Gamma => "gamma",
            Generator::GammaStar => "gamma*",
        })
    }
}

/// PBW basis element `alpha^a gamma^k gamma*^l`; negative `a_power` stands
/// for `alpha*^{-a_power}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub a_power: i32,
    pub k: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a_power: 0, k: 0, l: 0 };

    pub const fn new(a_power: i32, k: u32, l: u32) -> Self {
        Monomial { a_power, k, l }
    }

    pub fn degree(&self) -> i32 {
        self.a_power + self.k as i32 - self.l as i32
    }

    /// Word length `|a| + k + l`.
    pub fn length(&self) -> u32 {
        self.a_power.unsigned_abs() + self.k + self.l
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// The generator word in PBW order.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.length() as usize);
        let g = if self.a_power >= 0 { Generator::Alpha } else { Generator::AlphaStar };
        w.extend(std::iter::repeat_n(g, self.a_power.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Generator::Gamma, self.k as usize));
        w.extend(std::iter::repeat_n(Generator::GammaStar, self.l as usize));
        w
    }

    /// Splits off the last letter: `self = prefix * last`.
    pub fn split_last(&self) -> Option<(Monomial, Generator)> {
        if self.l > 0 {
            Some((Monomial::new(self.a_power, self.k, self.l - 1), Generator::GammaStar))
        } else if self.k > 0 {
            Some((Monomial::new(self.a_power, self.k - 1, 0), Generator::Gamma))
        } else if self.a_power > 0 {
            Some((Monomial::new(self.a_power - 1, 0, 0), Generator::Alpha))
        } else if self.a_power < 0 {
            Some((Monomial::new(self.a_power + 1, 0, 0), Generator::AlphaStar))
        } else {
            None
        }
    }

    /// All monomials of word length at most `max_len`, in ascending order.
    pub fn all_up_to(max_len: u32) -> Vec<Monomial> {
        let m = max_len as i32;
        let mut out = Vec::new();
        for a in -m..=m {
            for k in 0..=max_len {
                for l in 0..=max_len {
                    let mono = Monomial::new(a, k, l);
                    if mono.length() <= max_len {
                        out.push(mono);
                    }
                }
            }
        }
        out
    }

    /// Monomials of the given degree and word length at most `max_len`.
    pub fn of_degree(degree: i32, max_len: u32) -> Vec<Monomial> {
        Self::all_up_to(max_len).into_iter().filter(|m| m.degree() == degree).collect()
    }
}

impl Monomial {
    /// LaTeX form, e.g. `\alpha^{*2}\gamma\gamma^{*}`.
    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return r"\mathbb{1}".into();
        }
        let pw = |name: &str, star: bool, e: u32| match (star, e) {
            (false, 1) => name.to_string(),
            (false, _) => format!("{name}^{{{e}}}"),
            (true, 1) => format!("{name}^{{*}}"),
            (true, _) => format!("{name}^{{*{e}}}"),
        };
        let mut out = String::new();
        if self.a_power != 0 {
            out.push_str(&pw(r"\alpha", self.a_power < 0, self.a_power.unsigned_abs()));
        }
        if self.k > 0 {
            out.push_str(&pw(r"\gamma", false, self.k));
        }
        if self.l > 0 {
            out.push_str(&pw(r"\gamma", true, self.l));
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let pw = |name: &str, e: u32| if e == 1 { name.to_string() } else { format!("{name}^{e}") };
        if self.a_power > 0 {
            parts.push(pw("alpha", self.a_power as u32));
        } else if self.a_power < 0 {
            parts.push(pw("alpha*", self.a_power.unsigned_abs()));
        }
        if self.k > 0 {
            parts.push(pw("gamma", self.k));
        }
        if self.l > 0 {
            parts.push(pw("gamma*", self.l));
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_names() {
        assert_eq!(Monomial::new(-2, 1, 3).to_latex(), r"\alpha^{*2}\gamma\gamma^{*3}");
        assert_eq!(Monomial::new(1, 0, 1).to_latex(), r"\alpha\gamma^{*}");
        assert_eq!(Monomial::ONE.to_latex(), r"\mathbb{1}");
    }

    #[test]
    fn degree_and_length() {
        let m = Monomial::new(-2, 1, 3);
        assert_eq!(m.degree(), -4);
        assert_eq!(m.length(), 6);
        assert_eq!(m.word().len(), 6);
        assert_eq!(m.to_string(), "alpha*^2 gamma gamma*^3");
    }

    #[test]
    fn split_last_rebuilds_word() {
        let m = Monomial::new(2, 1, 1);
        let mut w = Vec::new();
        let mut cur = m;
        while let Some((p, g)) = cur.split_last() {
            w.push(g);
            cur = p;
        }
        w.reverse();
        assert_eq!(w, m.word());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_up_to(0), vec![Monomial::ONE]);
        assert_eq!(Monomial::all_up_to(1).len(), 5);
        assert!(Monomial::of_degree(0, 2).contains(&Monomial::new(0, 1, 1)));
    }
}
