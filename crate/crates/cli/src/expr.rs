//! Small arithmetic language for custom integrands in the variable `t`.
//!
//! Numbers, `t`, `pi`, `e`, `i`, the operators `+ - * / ^` and calls such as
//! `exp(-t)`, `sqrt(t)`, `gamma(z)`, `hyp1f1(a, b, z)` are understood.
//! Evaluation is complex throughout, with principal branches.

use hyperroots::cx::{self, c, Complex, I};
use hyperroots::specfun;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Complex),
    Var,
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Func {
    Exp,
    Ln,
    Sqrt,
    Cbrt,
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Asin,
    Acos,
    Asinh,
    Acosh,
    Abs,
    Re,
    Im,
    Gamma,
    Pow,
    Hyp0f1,
    Hyp1f1,
    Hyp2f1,
    LowerGamma,
    Pcfd,
}

impl Func {
    fn lookup(name: &str) -> Option<(Func, usize)> {
        use Func::*;
        Some(match name {
            "exp" => (Exp, 1),
            "ln" | "log" => (Ln, 1),
            "sqrt" => (Sqrt, 1),
            "cbrt" => (Cbrt, 1),
            "sin" => (Sin, 1),
            "cos" => (Cos, 1),
            "tan" => (Tan, 1),
            "sinh" => (Sinh, 1),
            "cosh" => (Cosh, 1),
            "tanh" => (Tanh, 1),
            "asin" => (Asin, 1),
            "acos" => (Acos, 1),
            "asinh" => (Asinh, 1),
            "acosh" => (Acosh, 1),
            "abs" => (Abs, 1),
            "re" => (Re, 1),
            "im" => (Im, 1),
            "gamma" => (Gamma, 1),
            "pow" => (Pow, 2),
            "hyp0f1" => (Hyp0f1, 2),
            "hyp1f1" => (Hyp1f1, 3),
            "hyp2f1" => (Hyp2f1, 4),
            "lower_gamma" => (LowerGamma, 2),
            "pcfd" => (Pcfd, 2),
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse::<f64>().map_err(|_| format!("bad number `{s}`"))?;
            out.push(Tok::Num(v));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^(),".contains(ch) {
            out.push(Tok::Sym(ch));
            i += 1;
        } else {
            return Err(format!("unexpected character `{ch}`"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(&Tok::Sym(ch)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<(), String> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(format!("expected `{ch}` at token {}", self.pos))
        }
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                Op::Add
            } else if self.eat('-') {
                Op::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                Op::Mul
            } else if self.eat('/') {
                Op::Div
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, String> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, String> {
        let base = self.atom()?;
        if self.eat('^') {
            // right associative; the exponent may carry its own sign
            let exp = self.unary()?;
            return Ok(Expr::Bin(Op::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Expr::Num(c(v)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.eat('(') {
                    let (f, arity) = Func::lookup(&name).ok_or_else(|| format!("unknown function `{name}`"))?;
                    let mut args = vec![self.expr()?];
                    while self.eat(',') {
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    if args.len() != arity {
                        return Err(format!("`{name}` takes {arity} argument(s), got {}", args.len()));
                    }
                    return Ok(Expr::Call(f, args));
                }
                match name.as_str() {
                    "t" => Ok(Expr::Var),
                    "pi" => Ok(Expr::Num(c(std::f64::consts::PI))),
                    "e" => Ok(Expr::Num(c(std::f64::consts::E))),
                    "i" => Ok(Expr::Num(I)),
                    _ => Err(format!("unknown name `{name}`")),
                }
            }
            Some(tok) => Err(format!("unexpected token {tok:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, String> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input after token {}", p.pos));
    }
    Ok(e)
}

const NAN: Complex = Complex::new(f64::NAN, f64::NAN);

impl Expr {
    /// Value at `t`; special-function errors evaluate to NaN.
    pub fn eval(&self, t: f64) -> Complex {
        match self {
            Expr::Num(v) => *v,
            Expr::Var => c(t),
            Expr::Neg(e) => -e.eval(t),
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(t), b.eval(t));
                match op {
                    Op::Add => a + b,
                    Op::Sub => a - b,
                    Op::Mul => a * b,
                    Op::Div => a / b,
                    Op::Pow => power(a, b),
                }
            }
            Expr::Call(f, args) => {
                let v: Vec<Complex> = args.iter().map(|a| a.eval(t)).collect();
                call(*f, &v)
            }
        }
    }
}

fn power(a: Complex, b: Complex) -> Complex {
    if b.im == 0.0 && b.re.fract() == 0.0 && b.re.abs() <= 64.0 {
        return a.powi(b.re as i32);
    }
    cx::pow(a, b)
}

fn call(f: Func, v: &[Complex]) -> Complex {
    use Func::*;
    let z = v[0];
    let ok = |r: hyperroots::Result<Complex>| r.unwrap_or(NAN);
    match f {
        Exp => z.exp(),
        Ln => cx::ln(z),
        Sqrt => cx::sqrt(z),
        Cbrt => cx::cbrt(z),
        Sin => z.sin(),
        Cos => z.cos(),
        Tan => z.tan(),
        Sinh => z.sinh(),
        Cosh => z.cosh(),
        Tanh => z.tanh(),
        Asin => cx::asin(z),
        Acos => cx::acos(z),
        Asinh => cx::asinh(z),
        Acosh => cx::acosh(z),
        Abs => c(z.norm()),
        Re => c(z.re),
        Im => c(z.im),
        Gamma => ok(specfun::gamma(z)),
        Pow => power(v[0], v[1]),
        Hyp0f1 => ok(specfun::hyp_pfq(
            &specfun::HypergeometricSpec::new(&[], &[v[0]], v[1]),
            &specfun::SeriesControl::default(),
        )
        .and_then(|r| r.into_value("hyp0f1"))),
        Hyp1f1 => ok(specfun::hyp1f1(v[0], v[1], v[2])),
        Hyp2f1 => ok(specfun::hyp2f1(v[0], v[1], v[2], v[3])),
        LowerGamma => ok(specfun::lower_incomplete_gamma(v[0], v[1])),
        Pcfd => ok(specfun::parabolic_cylinder_d(v[0], v[1])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(src: &str, t: f64) -> Complex {
        parse(src).unwrap().eval(t)
    }

    #[test]
    fn precedence() {
        assert_eq!(at("1 + 2 * 3", 0.0), c(7.0));
        assert_eq!(at("-t^2", 3.0), c(-9.0));
        assert_eq!(at("2^3^2", 0.0), c(512.0));
        assert_eq!(at("2^-1", 0.0), c(0.5));
        assert_eq!(at("(1 + 2) * 3", 0.0), c(9.0));
        assert_eq!(at("1e-2 * t", 2.0), c(0.02));
        assert_eq!(at("10 - 4 - 3", 0.0), c(3.0));
    }

    #[test]
    fn functions_and_constants() {
        assert!((at("exp(-t) * t^(-0.5)", 1.0).re - (-1f64).exp()).abs() < 1e-15);
        assert!((at("sqrt(-1)", 0.0) - I).norm() < 1e-15);
        assert!((at("gamma(0.5)^2", 0.0).re - std::f64::consts::PI).abs() < 1e-13);
        assert_eq!(at("e^(i*pi)", 0.0).re, -1.0);
        assert!((at("hyp1f1(1, 2, t)", 1.0).re - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn errors() {
        assert!(parse("exp(").is_err());
        assert!(parse("foo(t)").is_err());
        assert!(parse("x + 1").is_err());
        assert!(parse("pow(t)").is_err());
        assert!(parse("1 2").is_err());
        assert!(parse("t $ 2").is_err());
    }
}
