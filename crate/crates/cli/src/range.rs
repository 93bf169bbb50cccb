use std::str::FromStr;

/// A list of nonnegative integers given as `7`, `2..10` (inclusive) or
/// `1,5,9`. Pieces can be mixed: `1..3,10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for piece in s.split(',').map(str::trim) {
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("not a nonnegative integer: {x:?}"))
            };
            match piece.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                    if a > b {
                        return Err(format!("empty range {piece:?}"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(num(piece)?),
            }
        }
        Ok(IntList(out))
    }
}
