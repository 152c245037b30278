use super::{Presentation, Relation, Word};
use crate::error::{ParseError, ParseErrorKind};

/// Parses the presentation text format described in the module docs.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut p = Parser::new(text);
    if p.toks.is_empty() {
        return Err(ParseError { offset: 0, kind: ParseErrorKind::Empty });
    }
    let declared = if p.peek() == Some('<') {
        p.bump();
        Some(p.generator_list()?)
    } else {
        None
    };
    let items = p.item_list(declared.is_some())?;
    if declared.is_some() {
        p.expect('>')?;
    }
    if let Some((off, c)) = p.current() {
        return Err(p.syntax(off, format!("unexpected '{c}'")));
    }

    // In the bare form generators are declared by their first use in an
    // ordinary relation.
    let generators = match declared {
        Some(g) => g,
        None => {
            let mut g = Vec::new();
            for item in &items {
                if let Item::Chain(words) = item {
                    for w in words {
                        for &(_, c) in &w.letters {
                            if !g.contains(&c) {
                                g.push(c);
                            }
                        }
                    }
                }
            }
            g
        }
    };

    let mut relations = Vec::new();
    for item in items {
        match item {
            Item::Chain(words) => {
                let words = words
                    .iter()
                    .map(|w| w.resolve(&generators))
                    .collect::<Result<Vec<_>, _>>()?;
                for pair in words.windows(2) {
                    push_relation(&mut relations, Relation::new(pair[0].clone(), pair[1].clone()));
                }
            }
            Item::Abelian => {
                for i in 0..generators.len() {
                    for j in i + 1..generators.len() {
                        let lhs = Word::from_factors([(i, 1), (j, 1), (i, -1), (j, -1)]);
                        push_relation(&mut relations, Relation::new(lhs, Word::identity()));
                    }
                }
            }
            Item::Central(w) => {
                let w = w.resolve(&generators)?;
                for g in 0..generators.len() {
                    let gw = Word::generator(g);
                    push_relation(&mut relations, Relation::new(w.concat(&gw), gw.concat(&w)));
                }
            }
        }
    }
    Ok(Presentation::new(generators, relations))
}

/// Parses a single word against known generator names.
pub(crate) fn parse_word(text: &str, generators: &[char]) -> Result<Word, ParseError> {
    let mut p = Parser::new(text);
    let w = p.word()?;
    if let Some((off, c)) = p.current() {
        return Err(p.syntax(off, format!("unexpected '{c}'")));
    }
    w.resolve(generators)
}

// Relations whose relator reduces to the empty word carry no information.
fn push_relation(out: &mut Vec<Relation>, r: Relation) {
    if !r.relator().is_identity() {
        out.push(r);
    }
}

/// A word before generator names are resolved to indices.
struct RawWord {
    letters: Vec<(usize, char)>,
    factors: Vec<(char, i64)>,
}

impl RawWord {
    fn resolve(&self, generators: &[char]) -> Result<Word, ParseError> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for (&(off, c), &(_, k)) in self.letters.iter().zip(&self.factors) {
            let g = generators
                .iter()
                .position(|&x| x == c)
                .ok_or(ParseError { offset: off, kind: ParseErrorKind::UndeclaredGenerator(c) })?;
            factors.push((g, k));
        }
        Ok(Word::from_factors(factors))
    }
}

enum Item {
    Chain(Vec<RawWord>),
    Abelian,
    Central(RawWord),
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let toks = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { text, toks, pos: 0 }
    }

    fn current(&self) -> Option<(usize, char)> {
        self.toks.get(self.pos).copied()
    }

    fn peek(&self) -> Option<char> {
        self.current().map(|(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn offset(&self) -> usize {
        self.current().map_or(self.text.len(), |(o, _)| o)
    }

    fn syntax(&self, offset: usize, msg: String) -> ParseError {
        ParseError { offset, kind: ParseErrorKind::Syntax(msg) }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.current() {
            Some((_, d)) if d == c => {
                self.bump();
                Ok(())
            }
            Some((off, d)) => Err(self.syntax(off, format!("expected '{c}', found '{d}'"))),
            None => Err(self.syntax(self.text.len(), format!("expected '{c}', found end of input"))),
        }
    }

    /// Matches a keyword spelled by the next non-whitespace characters.
    fn keyword(&mut self, kw: &str) -> bool {
        let n = kw.chars().count();
        let matches = self.toks.len() >= self.pos + n
            && self.toks[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(kw.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn generator_list(&mut self) -> Result<Vec<char>, ParseError> {
        let mut gens = Vec::new();
        if self.peek() == Some('|') {
            self.bump();
            return Ok(gens);
        }
        loop {
            match self.current() {
                Some((off, c)) if is_generator(c) => {
                    if gens.contains(&c) {
                        return Err(self.syntax(off, format!("generator '{c}' declared twice")));
                    }
                    gens.push(c);
                    self.bump();
                }
                Some((off, c)) => return Err(self.syntax(off, format!("expected a generator letter, found '{c}'"))),
                None => return Err(self.syntax(self.text.len(), "unterminated generator list".into())),
            }
            match self.peek() {
                Some(',') => self.bump(),
                Some('|') => {
                    self.bump();
                    return Ok(gens);
                }
                _ => return Err(self.syntax(self.offset(), "expected ',' or '|'".into())),
            }
        }
    }

    fn item_list(&mut self, bracketed: bool) -> Result<Vec<Item>, ParseError> {
        let mut items = Vec::new();
        if bracketed && self.peek() == Some('>') {
            return Ok(items);
        }
        loop {
            items.push(self.item()?);
            if self.peek() == Some(',') {
                self.bump();
            } else {
                return Ok(items);
            }
        }
    }

    fn at_item_end(&self) -> bool {
        matches!(self.peek(), None | Some(',') | Some('>'))
    }

    fn item(&mut self) -> Result<Item, ParseError> {
        let start = self.pos;
        if self.keyword("abelian") && self.at_item_end() {
            return Ok(Item::Abelian);
        }
        self.pos = start;
        if self.keyword("D(G)={e}") {
            return Ok(Item::Abelian);
        }
        self.pos = start;
        if self.keyword("central(") {
            let w = self.word()?;
            self.expect(')')?;
            return Ok(Item::Central(w));
        }
        self.pos = start;
        let mut words = vec![self.word()?];
        while self.peek() == Some('=') {
            self.bump();
            words.push(self.word()?);
        }
        if words.len() < 2 {
            return Err(self.syntax(self.offset(), "expected '=' in relation".into()));
        }
        Ok(Item::Chain(words))
    }

    fn word(&mut self) -> Result<RawWord, ParseError> {
        let mut letters = Vec::new();
        let mut factors = Vec::new();
        let mut any = false;
        while let Some((off, c)) = self.current() {
            if c != 'e' && !is_generator(c) {
                break;
            }
            self.bump();
            any = true;
            let k = if self.peek() == Some('^') {
                self.bump();
                self.exponent()?
            } else {
                1
            };
            if c != 'e' {
                letters.push((off, c));
                factors.push((c, k));
            }
        }
        if !any {
            let msg = match self.peek() {
                Some(c) => format!("expected a word, found '{c}'"),
                None => "expected a word, found end of input".to_string(),
            };
            return Err(self.syntax(self.offset(), msg));
        }
        Ok(RawWord { letters, factors })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let start = self.offset();
        let negative = self.peek() == Some('-');
        if negative {
            self.bump();
        }
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.syntax(self.offset(), "expected exponent digits".into()));
        }
        let v: i64 = digits
            .parse()
            .map_err(|_| self.syntax(start, format!("exponent {digits} out of range")))?;
        Ok(if negative { -v } else { v })
    }
}

fn is_generator(c: char) -> bool {
    c.is_ascii_lowercase() && c != 'e'
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_presentation() {
        let p = parse_presentation("a^8=e").unwrap();
        assert_eq!(p.generators, vec!['a']);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].lhs, Word::from_factors([(0, 8)]));
        assert!(p.relations[0].rhs.is_identity());
    }

    #[test]
    fn chains_expand_pairwise() {
        let p = parse_presentation("x^4=y^4=e, yx=x^3y").unwrap();
        assert_eq!(p.generators, vec!['x', 'y']);
        assert_eq!(p.relations.len(), 3);
        assert_eq!(p.relations[0].rhs, Word::from_factors([(1, 4)]));
    }

    #[test]
    fn trivial_relation_vanishes() {
        let p = parse_presentation("e=e").unwrap();
        assert!(p.generators.is_empty());
        assert!(p.relations.is_empty());
        let p = parse_presentation("  e = e^3 ").unwrap();
        assert!(p.relations.is_empty());
    }

    #[test]
    fn pseudo_relations() {
        let p = parse_presentation("a^2=b^2=c^2=e, abelian").unwrap();
        assert_eq!(p.relations.len(), 3 + 3);
        let q = parse_presentation("a^2=b^2=c^2=e, D(G)={e}").unwrap();
        assert_eq!(p, q);
        let p = parse_presentation("x^4=y^4=e, yx=x^3y^3, central(x^2), central(y^2)").unwrap();
        // central(x^2) adds x^2y=yx^2 only; x^2x=xx^2 reduces away
        assert_eq!(p.relations.len(), 3 + 1 + 1);
        assert_eq!(p.relations[3].lhs.render(&p.generators), "x^2y");
    }

    #[test]
    fn whitespace_and_negative_exponents() {
        let p = parse_presentation(" a ^ - 1 b = b a^ 3 ").unwrap();
        assert_eq!(p.relations[0].lhs, Word::from_factors([(0, -1), (1, 1)]));
    }

    #[test]
    fn error_offsets() {
        let e = parse_presentation("   ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Empty);
        let e = parse_presentation("a^8").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_presentation("a^=e").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_presentation("a^2=e, central(q)").unwrap_err();
        assert_eq!(e, ParseError { offset: 15, kind: ParseErrorKind::UndeclaredGenerator('q') });
        let e = parse_presentation("<a | a^2=b>").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndeclaredGenerator('b'));
        assert_eq!(e.offset, 9);
        let e = parse_presentation("a=A").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_presentation("<a,a | >").unwrap_err();
        assert_eq!(e.offset, 3);
    }

    #[test]
    fn bracketed_form_round_trips() {
        for text in ["x^8=y^4=e, x^4=y^2, yx=x^3y^3", "e=e", "a^2=b^2=e, abelian", "<a | >"] {
            let p = parse_presentation(text).unwrap();
            let printed = p.to_string();
            assert_eq!(parse_presentation(&printed).unwrap(), p, "{printed}");
        }
    }
}
