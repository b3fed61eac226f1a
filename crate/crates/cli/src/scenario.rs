//! Line-oriented scenario files and their static validation.
//!
//! One directive per line, `#` starts a comment:
//!
//! ```text
//! qubit <a> <b>            # complex amplitudes, or a preset: zero one plus minus
//! basis <gamma> <phi> <atom>
//! outsider-measure
//! outsider-not-measure
//! insider-basic [theta0 theta1]
//! insider-liar [theta0 theta1]
//! derive <judgement>
//! classical-status <judgement>
//! ```
//!
//! Angles accept plain floats plus `pi`, `-pi`, `pi/<n>` and `-pi/<n>`.
//! Validation is static: a step that needs the qubit after a destructive
//! measurement already consumed it is rejected up front with a no-cloning
//! diagnostic.

use std::fmt;

use qjudge_core::logic::{parse_formula, parse_judgement, Judgement};
use qjudge_core::quantum::{make_basis, make_qubit, Amplitude, Basis, QuantumError, Qubit};

/// Recreatable description of the initial state. Descriptions are clonable;
/// states are not: each trial realizes a fresh qubit from the description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QubitSpec {
    Amplitudes(Amplitude, Amplitude),
    Preset(QubitPreset),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitPreset {
    Zero,
    One,
    Plus,
    Minus,
}

impl QubitPreset {
    fn amplitudes(self) -> (Amplitude, Amplitude) {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let c = Amplitude::new;
        match self {
            QubitPreset::Zero => (c(1.0, 0.0), c(0.0, 0.0)),
            QubitPreset::One => (c(0.0, 0.0), c(1.0, 0.0)),
            QubitPreset::Plus => (c(s, 0.0), c(s, 0.0)),
            QubitPreset::Minus => (c(s, 0.0), c(-s, 0.0)),
        }
    }

    fn name(self) -> &'static str {
        match self {
            QubitPreset::Zero => "zero",
            QubitPreset::One => "one",
            QubitPreset::Plus => "plus",
            QubitPreset::Minus => "minus",
        }
    }
}

impl QubitSpec {
    pub fn realize(&self) -> Result<Qubit, QuantumError> {
        let (a, b) = match self {
            QubitSpec::Amplitudes(a, b) => (*a, *b),
            QubitSpec::Preset(p) => p.amplitudes(),
        };
        make_qubit(a, b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisSpec {
    pub gamma: f64,
    pub phi: f64,
    pub atom: String,
}

impl BasisSpec {
    pub fn realize(&self) -> Result<Basis, QuantumError> {
        make_basis(self.gamma, self.phi, &self.atom)
    }
}

/// One executable step.
#[derive(Debug, Clone, PartialEq)]
pub enum StepSpec {
    OutsiderMeasure,
    OutsiderNotMeasure,
    InsiderBasic { phases: Option<(f64, f64)> },
    InsiderLiar { phases: Option<(f64, f64)> },
    Derive(Judgement),
    ClassicalStatus(Judgement),
}

impl StepSpec {
    pub fn name(&self) -> &'static str {
        match self {
            StepSpec::OutsiderMeasure => "outsider-measure",
            StepSpec::OutsiderNotMeasure => "outsider-not-measure",
            StepSpec::InsiderBasic { .. } => "insider-basic",
            StepSpec::InsiderLiar { .. } => "insider-liar",
            StepSpec::Derive(_) => "derive",
            StepSpec::ClassicalStatus(_) => "classical-status",
        }
    }

    fn uses_qubit(&self) -> bool {
        matches!(
            self,
            StepSpec::OutsiderMeasure
                | StepSpec::OutsiderNotMeasure
                | StepSpec::InsiderBasic { .. }
                | StepSpec::InsiderLiar { .. }
        )
    }

    fn consumes_qubit(&self) -> bool {
        matches!(self, StepSpec::OutsiderMeasure | StepSpec::OutsiderNotMeasure)
    }
}

/// A validated scenario. `seed` and `trials` come from the command line, not
/// the file; they default to 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub qubit: Option<QubitSpec>,
    pub basis: Option<BasisSpec>,
    pub steps: Vec<StepSpec>,
    pub seed: u64,
    pub trials: u32,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScenarioError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },
}

impl ScenarioError {
    fn syntax(line: usize, message: impl fmt::Display) -> ScenarioError {
        ScenarioError::Syntax {
            line,
            message: message.to_string(),
        }
    }

    fn validation(line: usize, message: impl fmt::Display) -> ScenarioError {
        ScenarioError::Validation {
            line,
            message: message.to_string(),
        }
    }
}

/// Parses and statically validates a scenario file.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut qubit: Option<QubitSpec> = None;
    let mut basis: Option<BasisSpec> = None;
    let mut steps: Vec<StepSpec> = Vec::new();
    // Line and directive of the step that consumed the qubit, if any.
    let mut consumed: Option<(usize, &'static str)> = None;

    for (index, raw_line) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = match line.split_once(char::is_whitespace) {
            Some((d, r)) => (d, r.trim()),
            None => (line, ""),
        };
        match directive {
            "qubit" => {
                if qubit.is_some() {
                    return Err(ScenarioError::validation(line_no, "duplicate qubit directive"));
                }
                qubit = Some(parse_qubit_spec(line_no, rest)?);
            }
            "basis" => {
                if basis.is_some() {
                    return Err(ScenarioError::validation(line_no, "duplicate basis directive"));
                }
                basis = Some(parse_basis_spec(line_no, rest)?);
            }
            "outsider-measure" | "outsider-not-measure" | "insider-basic" | "insider-liar" => {
                let step = parse_measurement_step(line_no, directive, rest)?;
                if qubit.is_none() {
                    return Err(ScenarioError::validation(
                        line_no,
                        format!("{directive} needs a qubit directive first"),
                    ));
                }
                if basis.is_none() {
                    return Err(ScenarioError::validation(
                        line_no,
                        format!("{directive} needs a basis directive first"),
                    ));
                }
                if let Some((at_line, by)) = consumed {
                    return Err(ScenarioError::validation(
                        line_no,
                        format!(
                            "qubit was consumed by {by} at line {at_line}; no-cloning forbids \
                             duplicating or re-measuring an unknown state"
                        ),
                    ));
                }
                if step.consumes_qubit() {
                    consumed = Some((line_no, step.name()));
                }
                debug_assert!(step.uses_qubit());
                steps.push(step);
            }
            "derive" => {
                let judgement = parse_judgement(rest)
                    .map_err(|e| ScenarioError::syntax(line_no, format!("derive: {e}")))?;
                steps.push(StepSpec::Derive(judgement));
            }
            "classical-status" => {
                // Accepts a judgement; a bare formula is read as an assertion.
                let judgement = if rest.contains("|-") || rest.contains('\u{22a2}') {
                    parse_judgement(rest)
                } else {
                    parse_formula(rest).map(Judgement::assertion)
                }
                .map_err(|e| ScenarioError::syntax(line_no, format!("classical-status: {e}")))?;
                steps.push(StepSpec::ClassicalStatus(judgement));
            }
            other => {
                return Err(ScenarioError::syntax(
                    line_no,
                    format!("unknown directive '{other}'"),
                ));
            }
        }
    }

    if let Some(spec) = &qubit {
        spec.realize()
            .map_err(|e| ScenarioError::validation(1, format!("qubit: {e}")))?;
    }
    if let Some(spec) = &basis {
        spec.realize()
            .map_err(|e| ScenarioError::validation(1, format!("basis: {e}")))?;
    }

    Ok(Scenario {
        qubit,
        basis,
        steps,
        seed: 0,
        trials: 1,
    })
}

fn parse_qubit_spec(line: usize, rest: &str) -> Result<QubitSpec, ScenarioError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    match tokens.as_slice() {
        [preset] => {
            let preset = match *preset {
                "zero" => QubitPreset::Zero,
                "one" => QubitPreset::One,
                "plus" => QubitPreset::Plus,
                "minus" => QubitPreset::Minus,
                other => {
                    return Err(ScenarioError::syntax(
                        line,
                        format!("unknown qubit preset '{other}'"),
                    ))
                }
            };
            Ok(QubitSpec::Preset(preset))
        }
        [a, b] => Ok(QubitSpec::Amplitudes(
            parse_amplitude(line, a)?,
            parse_amplitude(line, b)?,
        )),
        _ => Err(ScenarioError::syntax(
            line,
            "qubit takes two amplitudes or one preset name",
        )),
    }
}

fn parse_basis_spec(line: usize, rest: &str) -> Result<BasisSpec, ScenarioError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let [gamma, phi, atom] = tokens.as_slice() else {
        return Err(ScenarioError::syntax(
            line,
            "basis takes <gamma> <phi> <atom>",
        ));
    };
    if parse_formula(atom) != Ok(qjudge_core::logic::Formula::atom(*atom)) {
        return Err(ScenarioError::syntax(
            line,
            format!("'{atom}' is not a plain atom name"),
        ));
    }
    Ok(BasisSpec {
        gamma: parse_angle(line, gamma)?,
        phi: parse_angle(line, phi)?,
        atom: atom.to_string(),
    })
}

fn parse_measurement_step(
    line: usize,
    directive: &str,
    rest: &str,
) -> Result<StepSpec, ScenarioError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let phases = match (directive, tokens.as_slice()) {
        (_, []) => None,
        ("insider-basic" | "insider-liar", [t0, t1]) => {
            Some((parse_angle(line, t0)?, parse_angle(line, t1)?))
        }
        ("insider-basic" | "insider-liar", _) => {
            return Err(ScenarioError::syntax(
                line,
                format!("{directive} takes no arguments or two phases"),
            ))
        }
        _ => {
            return Err(ScenarioError::syntax(
                line,
                format!("{directive} takes no arguments"),
            ))
        }
    };
    Ok(match directive {
        "outsider-measure" => StepSpec::OutsiderMeasure,
        "outsider-not-measure" => StepSpec::OutsiderNotMeasure,
        "insider-basic" => StepSpec::InsiderBasic { phases },
        _ => StepSpec::InsiderLiar { phases },
    })
}

fn parse_angle(line: usize, token: &str) -> Result<f64, ScenarioError> {
    let (sign, body) = match token.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, token),
    };
    let value = if body == "pi" {
        std::f64::consts::PI
    } else if let Some(divisor) = body.strip_prefix("pi/") {
        let d: f64 = divisor
            .parse()
            .map_err(|_| ScenarioError::syntax(line, format!("bad angle '{token}'")))?;
        std::f64::consts::PI / d
    } else {
        body.parse::<f64>()
            .map_err(|_| ScenarioError::syntax(line, format!("bad angle '{token}'")))?
    };
    let value = sign * value;
    if !value.is_finite() {
        return Err(ScenarioError::syntax(
            line,
            format!("angle '{token}' is not finite"),
        ));
    }
    Ok(value)
}

/// Parses one amplitude token: `1`, `-0.5`, `0.8i`, `-i`, `0.6+0.8i`,
/// `1.2e-3-0.4i` and the like.
fn parse_amplitude(line: usize, token: &str) -> Result<Amplitude, ScenarioError> {
    let bad = || ScenarioError::syntax(line, format!("bad amplitude '{token}'"));
    let value = if let Some(body) = token.strip_suffix(['i', 'I']) {
        // Find a '+'/'-' separating real and imaginary parts: not at the
        // start and not part of an exponent.
        let split = body
            .char_indices()
            .skip(1)
            .find(|(pos, ch)| {
                matches!(ch, '+' | '-')
                    && !matches!(body.as_bytes()[pos - 1], b'e' | b'E')
            })
            .map(|(pos, _)| pos);
        match split {
            Some(pos) => {
                let re: f64 = body[..pos].parse().map_err(|_| bad())?;
                let im: f64 = match &body[pos..] {
                    "+" => 1.0,
                    "-" => -1.0,
                    imag => imag.parse().map_err(|_| bad())?,
                };
                Amplitude::new(re, im)
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    "+" => 1.0,
                    imag => imag.parse().map_err(|_| bad())?,
                };
                Amplitude::new(0.0, im)
            }
        }
    } else {
        Amplitude::new(token.parse().map_err(|_| bad())?, 0.0)
    };
    if !value.is_finite() {
        return Err(ScenarioError::syntax(
            line,
            format!("amplitude '{token}' is not finite"),
        ));
    }
    Ok(value)
}

fn render_amplitude(a: Amplitude) -> String {
    if a.im >= 0.0 {
        format!("{}+{}i", a.re, a.im)
    } else {
        format!("{}-{}i", a.re, -a.im)
    }
}

/// Canonical text for a scenario; `parse_scenario` inverts it.
pub fn render_scenario(scenario: &Scenario) -> String {
    let mut out = String::new();
    if let Some(qubit) = &scenario.qubit {
        match qubit {
            QubitSpec::Amplitudes(a, b) => {
                out.push_str(&format!(
                    "qubit {} {}\n",
                    render_amplitude(*a),
                    render_amplitude(*b)
                ));
            }
            QubitSpec::Preset(p) => out.push_str(&format!("qubit {}\n", p.name())),
        }
    }
    if let Some(basis) = &scenario.basis {
        out.push_str(&format!("basis {} {} {}\n", basis.gamma, basis.phi, basis.atom));
    }
    for step in &scenario.steps {
        match step {
            StepSpec::InsiderBasic { phases: Some((t0, t1)) } => {
                out.push_str(&format!("insider-basic {t0} {t1}\n"));
            }
            StepSpec::InsiderLiar { phases: Some((t0, t1)) } => {
                out.push_str(&format!("insider-liar {t0} {t1}\n"));
            }
            StepSpec::Derive(j) => out.push_str(&format!("derive {}\n", j.to_ascii())),
            StepSpec::ClassicalStatus(j) => {
                out.push_str(&format!("classical-status {}\n", j.to_ascii()));
            }
            other => {
                out.push_str(other.name());
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_parse_of_a_three_line_scenario() {
        let s = parse_scenario("qubit 0.6 0.8i\nbasis 0 0 A\ninsider-basic\n").unwrap();
        assert_eq!(
            s.qubit,
            Some(QubitSpec::Amplitudes(
                Amplitude::new(0.6, 0.0),
                Amplitude::new(0.0, 0.8)
            ))
        );
        assert_eq!(
            s.basis,
            Some(BasisSpec {
                gamma: 0.0,
                phi: 0.0,
                atom: "A".to_string()
            })
        );
        assert_eq!(s.steps, vec![StepSpec::InsiderBasic { phases: None }]);
        assert_eq!((s.seed, s.trials), (0, 1));
    }

    #[test]
    fn measuring_a_consumed_qubit_is_rejected_with_a_no_cloning_diagnostic() {
        let err = parse_scenario(
            "qubit 0.6 0.8\nbasis 0 0 A\noutsider-measure\ninsider-basic\n",
        )
        .unwrap_err();
        let message = err.to_string();
        assert!(message.contains("no-cloning"), "got: {message}");
        assert!(message.contains("line 4"), "got: {message}");

        let err = parse_scenario(
            "qubit 0.6 0.8\nbasis 0 0 A\noutsider-measure\noutsider-measure\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("no-cloning"));
    }

    #[test]
    fn measurement_without_a_qubit_line_is_rejected() {
        let err = parse_scenario("basis 0 0 A\noutsider-measure\n").unwrap_err();
        assert!(err.to_string().contains("needs a qubit directive"));
    }

    #[test]
    fn measurement_without_a_basis_line_is_rejected() {
        let err = parse_scenario("qubit zero\noutsider-measure\n").unwrap_err();
        assert!(err.to_string().contains("needs a basis directive"));
    }

    #[test]
    fn empty_and_comment_only_scenarios_parse() {
        let s = parse_scenario("").unwrap();
        assert!(s.steps.is_empty() && s.qubit.is_none());
        let s = parse_scenario("# just a comment\n\n").unwrap();
        assert!(s.steps.is_empty());
    }

    #[test]
    fn derive_steps_do_not_need_the_qubit() {
        let s = parse_scenario(
            "qubit plus\nbasis 0 0 A\noutsider-measure\nderive |- A\nclassical-status A & A^\n",
        )
        .unwrap();
        assert_eq!(s.steps.len(), 3);
        assert!(matches!(&s.steps[2], StepSpec::ClassicalStatus(j)
            if j.to_ascii() == "|- A & A^"));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_scenario("qubit 0.6 0.8\nconjure\n").unwrap_err();
        assert_eq!(
            err,
            ScenarioError::Syntax {
                line: 2,
                message: "unknown directive 'conjure'".to_string()
            }
        );
        assert!(parse_scenario("qubit wat\n").is_err());
        assert!(parse_scenario("basis 0 0 A^\n").is_err());
        assert!(parse_scenario("qubit 0 0\n").is_err()); // zero vector
        assert!(parse_scenario("derive A\n").is_err()); // missing turnstile
    }

    #[test]
    fn angle_sugar_is_accepted() {
        let s = parse_scenario("basis pi/4 -pi A\n").unwrap();
        let basis = s.basis.unwrap();
        assert!((basis.gamma - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((basis.phi + std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn amplitude_forms_parse() {
        let cases = [
            ("1", Amplitude::new(1.0, 0.0)),
            ("-0.5", Amplitude::new(-0.5, 0.0)),
            ("0.8i", Amplitude::new(0.0, 0.8)),
            ("-0.8i", Amplitude::new(0.0, -0.8)),
            ("i", Amplitude::new(0.0, 1.0)),
            ("-i", Amplitude::new(0.0, -1.0)),
            ("0.6+0.8i", Amplitude::new(0.6, 0.8)),
            ("0.6-0.8i", Amplitude::new(0.6, -0.8)),
            ("1e-2+2e-3i", Amplitude::new(0.01, 0.002)),
        ];
        for (text, expected) in cases {
            assert_eq!(parse_amplitude(1, text).unwrap(), expected, "case {text}");
        }
        assert!(parse_amplitude(1, "0.6+0.8j").is_err());
        assert!(parse_amplitude(1, "inf").is_err());
    }

    #[test]
    fn rendering_round_trips() {
        let text = "qubit 0.6+0i 0+0.8i\nbasis 0.5 -0.25 A\ninsider-basic 0.1 -0.2\nderive |- A & A^\n";
        let scenario = parse_scenario(text).unwrap();
        assert_eq!(parse_scenario(&render_scenario(&scenario)).unwrap(), scenario);
    }
}
