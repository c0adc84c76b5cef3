//! Periodic slot patterns of the Young column models.
//!
//! A column is built from unit cubes stacked with a fixed period; each cube
//! is cut into colored blocks (slots). A slot may be filled only when the
//! listed slots of the cube directly below it are filled, except for the
//! explicitly listed exceptional shapes.

use crate::cartan::AffineType;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Slot {
    pub color: usize,
    /// Cube within the period, 1-based.
    pub cube: usize,
    /// Supporting slots as (residue, period offset).
    pub supports: Vec<(usize, i64)>,
    /// Half-turn rotation partner as (residue, period offset).
    pub rot: (usize, i64),
}

/// A shape admitted without support checking: everything below the given
/// absolute slot index, plus the listed (residue, period) slots.
#[derive(Debug, Clone)]
pub struct ExceptionalShape {
    pub label: String,
    pub full_below: i64,
    pub plus: Vec<(usize, i64)>,
}

#[derive(Debug, Clone)]
pub struct ColumnPattern {
    pub ty: AffineType,
    pub period: usize,
    pub cubes: usize,
    pub slots: Vec<Slot>,
    pub exceptional: Vec<ExceptionalShape>,
}

impl ColumnPattern {
    /// The built-in pattern for a type.
    pub fn load(ty: AffineType) -> ColumnPattern {
        let text = match ty {
            AffineType::E6 => include_str!("../../assets/pattern_e6.txt"),
            AffineType::E7 => include_str!("../../assets/pattern_e7.txt"),
            AffineType::E8 => include_str!("../../assets/pattern_e8.txt"),
        };
        ColumnPattern::parse(ty, text).expect("built-in pattern must be valid")
    }

    pub fn parse(ty: AffineType, text: &str) -> Result<ColumnPattern> {
        let mut period = 0usize;
        let mut cubes = 0usize;
        let mut slots: Vec<(usize, Slot)> = Vec::new();
        let mut exceptional = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::DataInvalid(format!("line {}: {msg}", lineno + 1));
            let words: Vec<&str> = line.split_whitespace().collect();
            match words[0] {
                "period" => {
                    if words.len() != 4 || words[2] != "cubes" {
                        return Err(bad("expected: period <n> cubes <k>"));
                    }
                    period = words[1].parse().map_err(|_| bad("bad period"))?;
                    cubes = words[3].parse().map_err(|_| bad("bad cube count"))?;
                }
                "slot" => {
                    if words.len() != 10
                        || words[2] != "color"
                        || words[4] != "cube"
                        || words[6] != "supports"
                        || words[8] != "rot"
                    {
                        return Err(bad(
                            "expected: slot <r> color <i> cube <c> supports <list> rot <r@p>",
                        ));
                    }
                    let residue: usize = words[1].parse().map_err(|_| bad("bad residue"))?;
                    let rot = parse_pairs(words[9])
                        .map_err(|_| bad("bad rot"))?
                        .into_iter()
                        .next()
                        .ok_or_else(|| bad("bad rot"))?;
                    slots.push((
                        residue,
                        Slot {
                            color: words[3].parse().map_err(|_| bad("bad color"))?,
                            cube: words[5].parse().map_err(|_| bad("bad cube"))?,
                            supports: parse_pairs(words[7]).map_err(|_| bad("bad supports"))?,
                            rot,
                        },
                    ));
                }
                "exceptional" => {
                    if words.len() != 6 || words[2] != "full_below" || words[4] != "plus" {
                        return Err(bad("expected: exceptional <label> full_below <s> plus <list>"));
                    }
                    exceptional.push(ExceptionalShape {
                        label: words[1].to_string(),
                        full_below: words[3].parse().map_err(|_| bad("bad slot index"))?,
                        plus: parse_pairs(words[5]).map_err(|_| bad("bad plus list"))?,
                    });
                }
                other => return Err(bad(&format!("unknown directive {other}"))),
            }
        }
        let mut ordered: Vec<Option<Slot>> = vec![None; period];
        for (residue, slot) in slots {
            if residue >= period || ordered[residue].is_some() {
                return Err(Error::DataInvalid(format!("bad or repeated slot {residue}")));
            }
            ordered[residue] = Some(slot);
        }
        let slots: Option<Vec<Slot>> = ordered.into_iter().collect();
        let slots =
            slots.ok_or_else(|| Error::DataInvalid("missing slot definitions".to_string()))?;
        let pat = ColumnPattern { ty, period, cubes, slots, exceptional };
        pat.validate()?;
        Ok(pat)
    }

    pub fn validate(&self) -> Result<()> {
        let spec = self.ty.spec();
        // One period of slots carries each color with the multiplicity of
        // the corresponding mark: one period is one copy of the null root.
        for i in spec.nodes() {
            let count = self.slots.iter().filter(|s| s.color == i).count() as i64;
            if count != spec.marks[i] {
                return Err(Error::DataInvalid(format!(
                    "color {i} fills {count} slots per period, expected {}",
                    spec.marks[i]
                )));
            }
        }
        for (r, slot) in self.slots.iter().enumerate() {
            if slot.cube == 0 || slot.cube > self.cubes {
                return Err(Error::DataInvalid(format!("slot {r}: cube out of range")));
            }
            if slot.supports.is_empty() {
                return Err(Error::DataInvalid(format!("slot {r}: no supports")));
            }
            for &(sr, off) in &slot.supports {
                if sr >= self.period {
                    return Err(Error::DataInvalid(format!("slot {r}: bad support residue")));
                }
                let support_cube = self.slots[sr].cube as i64 + off * self.cubes as i64;
                if support_cube != slot.cube as i64 - 1 {
                    return Err(Error::DataInvalid(format!(
                        "slot {r}: support {sr}@{off} is not in the cube directly below"
                    )));
                }
            }
        }
        // Rotation partners form a bijection realizing one consistent color
        // permutation.
        let mut seen = vec![false; self.period];
        let mut perm = vec![usize::MAX; spec.n + 1];
        for (r, slot) in self.slots.iter().enumerate() {
            let (pr, _) = slot.rot;
            if pr >= self.period || seen[pr] {
                return Err(Error::DataInvalid(format!("slot {r}: bad rotation partner")));
            }
            seen[pr] = true;
            let from = slot.color;
            let to = self.slots[pr].color;
            if perm[from] == usize::MAX {
                perm[from] = to;
            } else if perm[from] != to {
                return Err(Error::DataInvalid(format!(
                    "slot {r}: rotation recolors {from} inconsistently"
                )));
            }
        }
        for shape in &self.exceptional {
            for &(sr, _) in &shape.plus {
                if sr >= self.period {
                    return Err(Error::DataInvalid(format!(
                        "exceptional {}: bad residue {sr}",
                        shape.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Copy of the pattern with one support edge dropped, for checking that
    /// the downstream isomorphism tests really depend on the support data.
    pub fn with_support_removed(&self, residue: usize, support_index: usize) -> ColumnPattern {
        let mut out = self.clone();
        out.slots[residue].supports.remove(support_index);
        out
    }

    /// Absolute slot index of (residue, period).
    pub fn slot_index(&self, residue: usize, period: i64) -> i64 {
        period * self.period as i64 + residue as i64
    }

    /// (residue, period) of an absolute slot index.
    pub fn residue_of(&self, s: i64) -> (usize, i64) {
        let p = s.div_euclid(self.period as i64);
        ((s - p * self.period as i64) as usize, p)
    }

    /// Color of an absolute slot index.
    pub fn color_of(&self, s: i64) -> usize {
        self.slots[self.residue_of(s).0].color
    }
}

fn parse_pairs(text: &str) -> std::result::Result<Vec<(usize, i64)>, ()> {
    text.split(',')
        .map(|item| {
            let (r, p) = item.split_once('@').ok_or(())?;
            Ok((r.parse().map_err(|_| ())?, p.parse().map_err(|_| ())?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_patterns_validate() {
        for ty in AffineType::ALL {
            let pat = ColumnPattern::load(ty);
            assert_eq!(pat.period, [12, 18, 30][ty.rank() - 6]);
            assert_eq!(pat.cubes, [6, 8, 10][ty.rank() - 6]);
            assert_eq!(pat.exceptional.len(), if ty == AffineType::E8 { 2 } else { 0 });
        }
    }

    #[test]
    fn removing_a_support_invalidates_the_pattern() {
        let pat = ColumnPattern::load(AffineType::E6);
        // Slot 2 rests on two slots; removing one leaves a well-formed but
        // wrong pattern, which validate() alone cannot detect.
        let broken = pat.with_support_removed(2, 0);
        assert_eq!(broken.slots[2].supports.len(), 1);
        assert!(broken.validate().is_ok());
    }
}
