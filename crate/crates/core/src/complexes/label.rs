use std::fmt;

/// Vertex label of a complex or element label of a poset.
///
/// The derived order is the canonical vertex order of every complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// A plain graph vertex (0-based), as in the neighborhood complex.
    Vertex(u32),
    /// `+v` or `-v`. Box complexes use the 1-based position of the graph
    /// vertex; cross-polytopes use the coordinate axis `1..=d`.
    Signed { index: u32, positive: bool },
    /// Suspension pole `(level, positive)`. Iterated suspensions use
    /// increasing levels.
    Pole(u8, bool),
    /// A vertex of one side of a join.
    Tagged(u8, Box<Label>),
    /// A simplex used as a vertex (barycentric subdivision, Hom poset).
    Simplex(Vec<Label>),
    Named(String),
}

impl Label {
    pub fn plus(index: u32) -> Label {
        Label::Signed { positive: true, index }
    }

    pub fn minus(index: u32) -> Label {
        Label::Signed { positive: false, index }
    }

    /// Sign swap, pole swap, and the induced action on tagged and simplex
    /// labels. `None` when the label carries no sign.
    pub fn antipode(&self) -> Option<Label> {
        Some(match self {
            Label::Signed { positive, index } => Label::Signed { positive: !positive, index: *index },
            Label::Pole(l, p) => Label::Pole(*l, !p),
            Label::Tagged(t, l) => Label::Tagged(*t, Box::new(l.antipode()?)),
            Label::Simplex(ls) => {
                let mut v = ls.iter().map(Label::antipode).collect::<Option<Vec<_>>>()?;
                v.sort();
                Label::Simplex(v)
            }
            Label::Vertex(_) | Label::Named(_) => return None,
        })
    }

    /// Parse the text form produced by `Display`.
    pub fn parse(s: &str) -> Label {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut parts = Vec::new();
            let mut depth = 0usize;
            let mut start = 0;
            for (i, c) in inner.char_indices() {
                match c {
                    '{' => depth += 1,
                    '}' => depth = depth.saturating_sub(1),
                    ' ' if depth == 0 => {
                        if i > start {
                            parts.push(Label::parse(&inner[start..i]));
                        }
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if start < inner.len() {
                parts.push(Label::parse(&inner[start..]));
            }
            return Label::Simplex(parts);
        }
        if let Some(rest) = s.strip_prefix('p') {
            if let Some(sign) = rest.chars().last().filter(|c| *c == '+' || *c == '-') {
                let level = &rest[..rest.len() - 1];
                let level = if level.is_empty() { Some(0) } else { level.parse::<u8>().ok() };
                if let Some(level) = level {
                    return Label::Pole(level, sign == '+');
                }
            }
        }
        if let Some((t, rest)) = s.split_once(':') {
            if let Ok(t) = t.parse::<u8>() {
                return Label::Tagged(t, Box::new(Label::parse(rest)));
            }
        }
        let signed = |sign: bool, digits: &str| digits.parse::<u32>().ok().map(|index| Label::Signed { positive: sign, index });
        if let Some(l) = s.strip_prefix('+').and_then(|d| signed(true, d)) {
            return l;
        }
        if let Some(l) = s.strip_prefix('-').and_then(|d| signed(false, d)) {
            return l;
        }
        if let Ok(v) = s.parse::<u32>() {
            return Label::Vertex(v);
        }
        Label::Named(s.to_string())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vertex(v) => write!(f, "{v}"),
            Label::Signed { positive, index } => write!(f, "{}{index}", if *positive { '+' } else { '-' }),
            Label::Pole(l, p) => {
                f.write_str("p")?;
                if *l > 0 {
                    write!(f, "{l}")?;
                }
                f.write_str(if *p { "+" } else { "-" })
            }
            Label::Tagged(t, l) => write!(f, "{t}:{l}"),
            Label::Simplex(ls) => {
                f.write_str("{")?;
                for (i, l) in ls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str("}")
            }
            Label::Named(s) => f.write_str(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        let labels = [
            Label::Vertex(3),
            Label::plus(1),
            Label::minus(12),
            Label::Pole(0, false),
            Label::Pole(2, true),
            Label::Tagged(1, Box::new(Label::minus(2))),
            Label::Simplex(vec![Label::plus(1), Label::Simplex(vec![Label::minus(2)])]),
            Label::Named("x".into()),
        ];
        for l in labels {
            assert_eq!(Label::parse(&l.to_string()), l);
        }
    }

    #[test]
    fn antipode_is_an_involution() {
        let l = Label::Simplex(vec![Label::plus(1), Label::minus(2)]);
        assert_eq!(l.antipode().unwrap(), Label::Simplex(vec![Label::minus(1), Label::plus(2)]));
        assert_eq!(l.antipode().unwrap().antipode().unwrap(), l);
        assert!(Label::Vertex(0).antipode().is_none());
    }
}
