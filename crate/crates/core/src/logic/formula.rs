use std::collections::BTreeSet;
use std::fmt;

/// Formula in negation normal form: duals appear on atoms only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    DualAtom(String),
    /// Additive conjunction `&`, reflecting a juxtaposed pair of assertions.
    Conj(Box<Formula>, Box<Formula>),
    /// Additive disjunction `⊕`, reflecting a juxtaposed pair of falsity
    /// judgements.
    Disj(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn dual_atom(name: impl Into<String>) -> Formula {
        Formula::DualAtom(name.into())
    }

    pub fn conj(left: Formula, right: Formula) -> Formula {
        Formula::Conj(Box::new(left), Box::new(right))
    }

    pub fn disj(left: Formula, right: Formula) -> Formula {
        Formula::Disj(Box::new(left), Box::new(right))
    }

    /// The dual formula: atoms flip to dual atoms and `&` swaps with `⊕`
    /// componentwise, so `dual(A & A⊥) = A⊥ ⊕ A`. An involution.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Atom(name) => Formula::DualAtom(name.clone()),
            Formula::DualAtom(name) => Formula::Atom(name.clone()),
            Formula::Conj(l, r) => Formula::disj(l.dual(), r.dual()),
            Formula::Disj(l, r) => Formula::conj(l.dual(), r.dual()),
        }
    }

    /// Atom names occurring in the formula, in sorted order.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) | Formula::DualAtom(name) => {
                out.insert(name.clone());
            }
            Formula::Conj(l, r) | Formula::Disj(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Canonical ASCII rendering: `^` for the dual, `(+)` for `⊕`. Nested
    /// connectives are parenthesized, so the output always reparses to the
    /// same tree.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, Symbols::ASCII, false);
        out
    }

    /// Rendering with `⊥` and `⊕`.
    pub fn to_unicode(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, Symbols::UNICODE, false);
        out
    }

    fn write(&self, out: &mut String, symbols: Symbols, nested: bool) {
        match self {
            Formula::Atom(name) => out.push_str(name),
            Formula::DualAtom(name) => {
                out.push_str(name);
                out.push_str(symbols.dual);
            }
            Formula::Conj(l, r) | Formula::Disj(l, r) => {
                let op = if matches!(self, Formula::Conj(..)) {
                    symbols.conj
                } else {
                    symbols.disj
                };
                if nested {
                    out.push('(');
                }
                l.write(out, symbols, true);
                out.push(' ');
                out.push_str(op);
                out.push(' ');
                r.write(out, symbols, true);
                if nested {
                    out.push(')');
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
struct Symbols {
    dual: &'static str,
    conj: &'static str,
    disj: &'static str,
}

impl Symbols {
    const ASCII: Symbols = Symbols {
        dual: "^",
        conj: "&",
        disj: "(+)",
    };
    const UNICODE: Symbols = Symbols {
        dual: "\u{22a5}",
        conj: "&",
        disj: "\u{2295}",
    };
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}
