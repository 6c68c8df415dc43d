//! Construction-expression parser for the CLI.
//!
//! Grammar: `U(r,n)`, `PU(r,n;l1,l2,…)`, `2U(r,n)`, `dsum(e1,e2)`,
//! `dual(e)`, `del(e,i,…)`, `con(e,i,…)`, `relax(e,mask)`, `pext(e,mask)`,
//! `spike(r;tip=n;trav=[…])`, `wheel(r)`, `whirl(r)`, plus the named
//! constants `P7 P7- P7= P8 O7 O7- AG23e F7` (and `F7* MW3 MW4 W3 W4`).
//! Masks are lowercase hex over element bits; traversal entries are words
//! over `x`/`y` (or `0`/`1`), one letter per leg.

use spikelab_core::catalog::{self, Named, SpikeSpec};
use spikelab_core::transforms;
use spikelab_core::{ElementSet, Matroid};

use crate::error::{Error, Result};

pub fn parse_expression(input: &str) -> Result<Matroid> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let m = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.fail("trailing input"));
    }
    Ok(m)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, message: &str) -> Error {
        Error::Expression { at: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected `{}`", b as char)))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected a number"));
        }
        String::from_utf8_lossy(&self.src[start..self.pos])
            .parse()
            .map_err(|e| self.fail(&format!("bad number: {e}")))
    }

    fn hex_mask(&mut self) -> Result<ElementSet> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_hexdigit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected a hex mask"));
        }
        u32::from_str_radix(&String::from_utf8_lossy(&self.src[start..self.pos]), 16)
            .map(ElementSet)
            .map_err(|e| self.fail(&format!("bad mask: {e}")))
    }

    fn number_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Matroid> {
        let head = self.word();
        if head.is_empty() {
            return Err(self.fail("expected an expression"));
        }
        match head.as_str() {
            "U" => {
                let (r, n) = self.two_numbers()?;
                Ok(catalog::uniform(r, n)?)
            }
            "2U" => {
                let (r, n) = self.two_numbers()?;
                Ok(catalog::doubled_uniform(r, n)?)
            }
            "PU" => {
                self.eat(b'(')?;
                let r = self.number()?;
                self.eat(b',')?;
                let n = self.number()?;
                self.eat(b';')?;
                let sizes = self.number_list()?;
                self.eat(b')')?;
                Ok(catalog::multi_parallel_uniform(r, n, &sizes)?)
            }
            "dsum" => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                self.eat(b')')?;
                Ok(transforms::direct_sum(&a, &b)?)
            }
            "dual" => {
                self.eat(b'(')?;
                let m = self.expr()?;
                self.eat(b')')?;
                Ok(m.dual())
            }
            "del" | "con" => {
                self.eat(b'(')?;
                let m = self.expr()?;
                self.eat(b',')?;
                let elements = ElementSet::from_elements(self.number_list()?);
                self.eat(b')')?;
                Ok(if head == "del" { m.delete(elements)? } else { m.contract(elements)? })
            }
            "relax" => {
                self.eat(b'(')?;
                let m = self.expr()?;
                self.eat(b',')?;
                let mask = self.hex_mask()?;
                self.eat(b')')?;
                Ok(transforms::relax(&m, mask)?)
            }
            "pext" => {
                self.eat(b'(')?;
                let m = self.expr()?;
                self.eat(b',')?;
                let mask = self.hex_mask()?;
                self.eat(b')')?;
                Ok(transforms::principal_extension(&m, mask)?)
            }
            "wheel" => {
                self.eat(b'(')?;
                let r = self.number()?;
                self.eat(b')')?;
                Ok(catalog::wheel(r)?)
            }
            "whirl" => {
                self.eat(b'(')?;
                let r = self.number()?;
                self.eat(b')')?;
                Ok(catalog::whirl(r)?)
            }
            "spike" => self.spike_tail(),
            _ => {
                // Named constant, possibly with a one-character suffix.
                let mut name = head;
                if let Some(suffix @ (b'-' | b'=' | b'*')) = self.src.get(self.pos).copied() {
                    name.push(suffix as char);
                    self.pos += 1;
                }
                let named: Named =
                    name.parse().map_err(|_| self.fail(&format!("unknown name `{name}`")))?;
                Ok(catalog::named(named)?)
            }
        }
    }

    fn two_numbers(&mut self) -> Result<(usize, usize)> {
        self.eat(b'(')?;
        let r = self.number()?;
        self.eat(b',')?;
        let n = self.number()?;
        self.eat(b')')?;
        Ok((r, n))
    }

    fn spike_tail(&mut self) -> Result<Matroid> {
        self.eat(b'(')?;
        let rank = self.number()?;
        let mut tip_class_size = 1;
        let mut traversals = Vec::new();
        while self.peek() == Some(b';') {
            self.pos += 1;
            let key = self.word();
            self.eat(b'=')?;
            match key.as_str() {
                "tip" => tip_class_size = self.number()?,
                "trav" => {
                    self.eat(b'[')?;
                    if self.peek() != Some(b']') {
                        loop {
                            traversals.push(self.traversal(rank)?);
                            if self.peek() == Some(b',') {
                                self.pos += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.eat(b']')?;
                }
                other => return Err(self.fail(&format!("unknown spike key `{other}`"))),
            }
        }
        self.eat(b')')?;
        Ok(catalog::spike(&SpikeSpec { rank, tip_class_size, traversals })?)
    }

    fn traversal(&mut self, rank: usize) -> Result<u16> {
        self.skip_ws();
        let mut bits = 0u16;
        for i in 0..rank {
            let side = match self.src.get(self.pos).copied() {
                Some(b'x') | Some(b'0') => 0,
                Some(b'y') | Some(b'1') => 1,
                _ => return Err(self.fail("traversal letters must be x/y or 0/1")),
            };
            bits |= side << i;
            self.pos += 1;
        }
        Ok(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spikelab_core::analysis::are_isomorphic;

    #[test]
    fn parses_the_grammar() {
        assert_eq!(parse_expression("U(2,4)").unwrap(), catalog::uniform(2, 4).unwrap());
        assert_eq!(
            parse_expression("PU(2,4;2,2,2)").unwrap(),
            catalog::multi_parallel_uniform(2, 4, &[2, 2, 2]).unwrap()
        );
        assert_eq!(parse_expression("2U(2,3)").unwrap(), catalog::doubled_uniform(2, 3).unwrap());
        assert_eq!(
            parse_expression("dsum(U(1,5),U(0,2))").unwrap().ground_size(),
            7
        );
        assert_eq!(
            parse_expression("dual(U(2,5))").unwrap(),
            catalog::uniform(3, 5).unwrap()
        );
        assert_eq!(parse_expression("del(U(2,5),0,4)").unwrap(), catalog::uniform(2, 3).unwrap());
        assert_eq!(parse_expression("con(U(2,5),1)").unwrap(), catalog::uniform(1, 4).unwrap());
        assert_eq!(parse_expression("wheel(4)").unwrap(), catalog::wheel(4).unwrap());
        assert_eq!(parse_expression("whirl(3)").unwrap(), catalog::whirl(3).unwrap());
    }

    #[test]
    fn parses_spikes_and_names() {
        let p7 = parse_expression("spike(3;tip=1;trav=[xxx,yyy])").unwrap();
        assert_eq!(p7, catalog::named(Named::P7).unwrap());
        let p7_binary = parse_expression("spike(3;tip=1;trav=[000,111])").unwrap();
        assert_eq!(p7, p7_binary);

        for name in ["P7", "P7-", "P7=", "P8", "O7", "O7-", "AG23e", "F7", "F7*", "MW3", "W4"] {
            assert!(parse_expression(name).is_ok(), "{name}");
        }
        assert!(parse_expression("Q9").is_err());
    }

    #[test]
    fn parses_relax_and_pext_with_masks() {
        // The rim of wheel(4) occupies bits 4..8, mask f0.
        let w4 = parse_expression("relax(wheel(4),f0)").unwrap();
        assert!(are_isomorphic(&w4, &catalog::whirl(4).unwrap()));

        let free = parse_expression("pext(U(2,3),7)").unwrap();
        assert_eq!(free, catalog::uniform(2, 4).unwrap());

        assert!(parse_expression("relax(U(2,4),3)").is_err());
        assert!(parse_expression("U(2,4) junk").is_err());
    }
}
