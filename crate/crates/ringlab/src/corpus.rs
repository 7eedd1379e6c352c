//! The built-in ring corpus and corpus-directory loading.

use crate::construct;
use crate::error::{Result, RingError};
use crate::parse::{parse_ring, serialize_ring};
use crate::ring::{Caps, FiniteRing};

/// One corpus slot: either a validated ring or a record of why the file was
/// rejected. Invalid entries stay in the corpus so reports can show a
/// per-ring skip instead of silently dropping them.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Option<FiniteRing>,
    pub issue: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn from_rings(rings: Vec<FiniteRing>) -> Self {
        let mut entries: Vec<CorpusEntry> = rings
            .into_iter()
            .map(|r| CorpusEntry {
                name: r.name().to_string(),
                ring: Some(r),
                issue: None,
            })
            .collect();
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Corpus { entries }
    }

    pub fn valid_rings(&self) -> impl Iterator<Item = &FiniteRing> {
        self.entries.iter().filter_map(|e| e.ring.as_ref())
    }

    pub fn get(&self, name: &str) -> Option<&FiniteRing> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .and_then(|e| e.ring.as_ref())
    }

    /// Hex SHA-256 over the canonical serializations, in name order; invalid
    /// entries contribute their name and issue text.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        for e in &self.entries {
            match &e.ring {
                Some(r) => hasher.update(serialize_ring(r).as_bytes()),
                None => {
                    hasher.update(e.name.as_bytes());
                    hasher.update(e.issue.as_deref().unwrap_or("invalid").as_bytes());
                }
            }
        }
        let out = hasher.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// Loads every `.ring` file in a directory. Files that fail to parse or
/// validate become invalid entries keyed by their file stem or declared name.
pub fn load_dir(path: &std::path::Path, caps: &Caps) -> Result<Corpus> {
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(path)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "ring"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(RingError::EmptyCorpus);
    }
    let mut entries = Vec::new();
    for file in files {
        let stem = file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "ring".into());
        let text = std::fs::read_to_string(&file)?;
        match parse_ring(&text) {
            Ok(ring) => {
                if ring.order() > caps.max_order {
                    entries.push(CorpusEntry {
                        name: ring.name().to_string(),
                        ring: None,
                        issue: Some(format!(
                            "order {} exceeds the configured limit {}",
                            ring.order(),
                            caps.max_order
                        )),
                    });
                    continue;
                }
                let report = crate::ring::validate_ring(&ring);
                if report.ok() {
                    entries.push(CorpusEntry {
                        name: ring.name().to_string(),
                        ring: Some(ring),
                        issue: None,
                    });
                } else {
                    let v = &report.violations[0];
                    entries.push(CorpusEntry {
                        name: ring.name().to_string(),
                        ring: None,
                        issue: Some(format!("validation failed: {} at {:?}", v.law, v.indices)),
                    });
                }
            }
            Err(e) => entries.push(CorpusEntry {
                name: stem,
                ring: None,
                issue: Some(format!("parse failed: {e}")),
            }),
        }
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    for pair in entries.windows(2) {
        if pair[0].name == pair[1].name {
            return Err(RingError::DuplicateRing(pair[0].name.clone()));
        }
    }
    Ok(Corpus { entries })
}

pub fn cyclic_ring(n: u32) -> FiniteRing {
    FiniteRing::new(format!("Z{n}"), vec![n], vec![1], vec![vec![1]])
        .expect("cyclic presentation is well formed")
}

pub fn gf4() -> FiniteRing {
    // basis 1, t with t^2 = t + 1
    FiniteRing::new(
        "GF4",
        vec![2, 2],
        vec![1, 0],
        vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 1]],
    )
    .expect("GF(4) presentation is well formed")
}

/// The Frobenius square on GF(4): `1 -> 1`, `t -> t^2 = t + 1`.
pub fn gf4_frobenius() -> construct::Endomorphism {
    construct::Endomorphism::new("frob", vec![vec![1, 0], vec![1, 1]])
}

/// Order-16 ring of 3x3 matrices over Z2 with constant diagonal `a` and
/// strictly upper entries `b, c, d`, presented on the basis `I, E12, E13,
/// E23`. The only nonzero nilpotent product is `E12 E23 = E13`.
pub fn scalar_upper_literal() -> FiniteRing {
    let k = 4;
    let mut products = vec![vec![0u64; k]; k * k];
    // identity row and column
    for i in 0..k {
        products[i][i] = 1; // e1 * e_i = e_i
        products[i * k][i] = 1; // e_i * e1 = e_i
    }
    products[k + 3] = vec![0, 0, 1, 0]; // E12 * E23 = E13
    FiniteRing::new("U3Z2", vec![2, 2, 2, 2], vec![1, 0, 0, 0], products)
        .expect("literal presentation is well formed")
}

/// `x Z2[x]/(x^3)` as a non-unital kernel over Z2: basis `x, x^2` with
/// `x * x = x^2`, everything else zero, actions through the identity of Z2.
pub fn nilpotent_cubic_kernel() -> construct::NonUnitalRing {
    construct::NonUnitalRing::new(
        "xcube",
        vec![2, 2],
        vec![vec![0, 1], vec![0, 0], vec![0, 0], vec![0, 0]],
        1,
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 0], vec![0, 1]],
    )
    .expect("kernel presentation is well formed")
}

/// The default corpus, constructed programmatically. The shipped `corpus/`
/// directory holds the same rings serialized; a test pins the two together.
pub fn builtin() -> Vec<FiniteRing> {
    let caps = Caps::default();
    let z2 = cyclic_ring(2);
    let z4 = cyclic_ring(4);
    vec![
        z2.clone(),
        cyclic_ring(3),
        z4.clone(),
        cyclic_ring(6),
        cyclic_ring(8),
        cyclic_ring(12),
        gf4(),
        construct::direct_product(&z2, &z2, &caps)
            .expect("in caps")
            .renamed("Z2xZ2"),
        construct::upper_triangular_ring(&z2, 2, &caps)
            .expect("in caps")
            .renamed("T2Z2"),
        construct::upper_triangular_ring(&z2, 3, &caps)
            .expect("in caps")
            .renamed("T3Z2"),
        construct::matrix_ring(&z2, 2, &caps)
            .expect("in caps")
            .renamed("M2Z2"),
        construct::matrix_ring(&z4, 2, &caps)
            .expect("in caps")
            .renamed("M2Z4"),
        scalar_upper_literal(),
        construct::trivial_extension(&z2, &caps)
            .expect("in caps")
            .renamed("TEZ2"),
        construct::scalar_plus_strict_upper(&z2, 3, &caps)
            .expect("in caps")
            .renamed("SU3Z2"),
    ]
}

/// File stem and content for each shipped corpus ring.
pub fn builtin_files() -> Vec<(String, String)> {
    builtin()
        .iter()
        .map(|r| (r.name().to_lowercase(), serialize_ring(r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::validate_ring;

    #[test]
    fn builtin_rings_validate() {
        let rings = builtin();
        assert_eq!(rings.len(), 15);
        for r in &rings {
            assert!(validate_ring(r).ok(), "{} must validate", r.name());
        }
        let orders: Vec<u64> = rings.iter().map(|r| r.order()).collect();
        assert_eq!(
            orders,
            vec![2, 3, 4, 6, 8, 12, 4, 4, 8, 64, 16, 256, 16, 4, 16]
        );
    }

    #[test]
    fn literal_scalar_upper_matches_construction() {
        let lit = scalar_upper_literal();
        assert!(validate_ring(&lit).ok());
        let con =
            construct::scalar_plus_strict_upper(&cyclic_ring(2), 3, &Caps::default()).unwrap();
        assert!(construct::ring_isomorphic(&lit, &con).unwrap());
    }

    #[test]
    fn gf4_frobenius_is_an_automorphism() {
        construct::validate_endomorphism(&gf4(), &gf4_frobenius()).unwrap();
    }

    #[test]
    fn digest_is_stable_under_reload() {
        let c1 = Corpus::from_rings(builtin());
        let c2 = Corpus::from_rings(builtin());
        assert_eq!(c1.digest(), c2.digest());
    }

    #[test]
    fn load_dir_reports_invalid_entries() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("z4.ring"),
            "ring Z4\norders 4\none 1\nmul 1 1 : 1\nend\n",
        )
        .unwrap();
        std::fs::write(
            dir.path().join("bad.ring"),
            "ring BAD\norders 4\none 1\nmul 1 1 : 2\nend\n",
        )
        .unwrap();
        std::fs::write(dir.path().join("junk.ring"), "not a ring\n").unwrap();
        let corpus = load_dir(dir.path(), &Caps::default()).unwrap();
        assert_eq!(corpus.entries.len(), 3);
        assert!(corpus.get("Z4").is_some());
        let bad = corpus.entries.iter().find(|e| e.name == "BAD").unwrap();
        assert!(bad.issue.as_deref().unwrap().contains("validation failed"));
        let junk = corpus.entries.iter().find(|e| e.name == "junk").unwrap();
        assert!(junk.issue.as_deref().unwrap().contains("parse failed"));
    }

    #[test]
    fn empty_dir_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            load_dir(dir.path(), &Caps::default()),
            Err(RingError::EmptyCorpus)
        ));
    }
}
