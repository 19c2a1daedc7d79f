use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisKind {
    /// One-line notation of a permutation, values 1-based.
    Perm,
    /// Restricted-growth string over the points `1..k` then `1'..k'`.
    Diagram,
}

/// Identifier of a distinguished basis element of a level algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId {
    kind: BasisKind,
    code: Box<[u8]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid basis identifier: {0}")]
pub struct BasisParseError(pub String);

impl BasisId {
    pub fn perm(one_line: &[u8]) -> Self {
        debug_assert!(is_permutation(one_line));
        BasisId { kind: BasisKind::Perm, code: one_line.into() }
    }

    /// A set-partition diagram from block labels of the `2k` points.
    /// Labels are renumbered into restricted-growth form.
    pub fn diagram(labels: &[u8]) -> Self {
        BasisId { kind: BasisKind::Diagram, code: canonical_rgs(labels).into() }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// Number of strands: permutation degree or half the number of diagram points.
    pub fn strands(&self) -> usize {
        match self.kind {
            BasisKind::Perm => self.code.len(),
            BasisKind::Diagram => self.code.len() / 2,
        }
    }

    /// Parses `[2,1,3]` or `{1,2'}{2,1'}`; the strand count of a diagram is inferred.
    pub fn parse(s: &str) -> Result<Self, BasisParseError> {
        let err = || BasisParseError(s.chars().take(64).collect());
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            if inner.trim().is_empty() {
                return Ok(BasisId::perm(&[]));
            }
            let vals: Vec<u8> = inner
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| err()))
                .collect::<Result<_, _>>()?;
            if !is_permutation(&vals) {
                return Err(err());
            }
            return Ok(BasisId::perm(&vals));
        }
        if t == "{}" {
            return Ok(BasisId { kind: BasisKind::Diagram, code: Box::new([]) });
        }
        let mut blocks: Vec<Vec<(bool, usize)>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(err)?;
            let end = body.find('}').ok_or_else(err)?;
            let mut block = Vec::new();
            for item in body[..end].split(',') {
                let item = item.trim();
                let (bottom, digits) = match item.strip_suffix('\'') {
                    Some(d) => (true, d),
                    None => (false, item),
                };
                let v: usize = digits.parse().map_err(|_| err())?;
                if v == 0 || v > 127 {
                    return Err(err());
                }
                block.push((bottom, v));
            }
            blocks.push(block);
            rest = body[end + 1..].trim_start();
        }
        let k = blocks.iter().flatten().map(|p| p.1).max().unwrap_or(0);
        let mut labels = vec![u8::MAX; 2 * k];
        for (b, block) in blocks.iter().enumerate() {
            for &(bottom, v) in block {
                let idx = if bottom { k + v - 1 } else { v - 1 };
                if labels[idx] != u8::MAX {
                    return Err(err());
                }
                labels[idx] = b as u8;
            }
        }
        if labels.contains(&u8::MAX) {
            return Err(err());
        }
        Ok(BasisId::diagram(&labels))
    }
}

pub(crate) fn is_permutation(v: &[u8]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        let i = x as usize;
        if i == 0 || i > v.len() || seen[i - 1] {
            return false;
        }
        seen[i - 1] = true;
    }
    true
}

pub(crate) fn canonical_rgs(labels: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    labels
        .iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BasisKind::Perm => {
                let v: Vec<String> = self.code.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", v.join(","))
            }
            BasisKind::Diagram => {
                let k = self.code.len() / 2;
                if k == 0 {
                    return f.write_str("{}");
                }
                let nblocks = self.code.iter().copied().max().map_or(0, |m| m as usize + 1);
                for b in 0..nblocks {
                    let mut items = Vec::new();
                    for (i, &l) in self.code.iter().enumerate() {
                        if l as usize == b {
                            items.push(if i < k { (i + 1).to_string() } else { format!("{}'", i - k + 1) });
                        }
                    }
                    write!(f, "{{{}}}", items.join(","))?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
