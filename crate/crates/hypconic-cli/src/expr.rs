//! Tiny arithmetic expression grammar for numeric flags, so parameters can
//! be given in closed form: numbers, `+ - * /`, parentheses, `pi`, and the
//! functions `log`, `sqrt`, `exp`.

pub fn parse(input: &str) -> Result<f64, String> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(format!("unexpected trailing input at position {} in '{input}'", p.pos));
    }
    if !v.is_finite() {
        return Err(format!("expression '{input}' does not evaluate to a finite number"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<f64, String> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<f64, String> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                '*' => {
                    self.pos += 1;
                    acc *= self.factor()?;
                }
                '/' => {
                    self.pos += 1;
                    acc /= self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<f64, String> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            other => Err(format!("unexpected token {other:?}")),
        }
    }

    fn number(&mut self) -> Result<f64, String> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == '.' {
                self.pos += 1;
            } else if (c == 'e' || c == 'E')
                && self
                    .chars
                    .get(self.pos + 1)
                    .is_some_and(|n| n.is_ascii_digit() || *n == '+' || *n == '-')
            {
                self.pos += 2;
            } else {
                break;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| format!("bad number '{text}'"))
    }

    fn name(&mut self) -> Result<f64, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let word: String = self.chars[start..self.pos].iter().collect();
        match word.as_str() {
            "pi" => Ok(std::f64::consts::PI),
            "log" | "sqrt" | "exp" => {
                self.expect('(')?;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(match word.as_str() {
                    "log" => v.ln(),
                    "sqrt" => v.sqrt(),
                    _ => v.exp(),
                })
            }
            other => Err(format!("unknown name '{other}'")),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), String> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!("expected '{c}' at position {}", self.pos))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse;

    #[test]
    fn closed_forms() {
        assert_eq!(parse("2").unwrap(), 2.0);
        assert!((parse("log(3/2)").unwrap() - 1.5f64.ln()).abs() < 1e-15);
        assert!((parse("sqrt(11/7)").unwrap() - (11.0f64 / 7.0).sqrt()).abs() < 1e-15);
        assert!((parse("sqrt(209)/21").unwrap() - 209.0f64.sqrt() / 21.0).abs() < 1e-15);
        assert!((parse("pi/2").unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(parse("1 - 2*3").unwrap(), -5.0);
        assert_eq!(parse("-(1+1)").unwrap(), -2.0);
        assert_eq!(parse("exp(0)").unwrap(), 1.0);
        assert_eq!(parse("1e-3").unwrap(), 1e-3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("").is_err());
        assert!(parse("2 +").is_err());
        assert!(parse("frob(2)").is_err());
        assert!(parse("1/0").is_err()); // infinite
        assert!(parse("2 2").is_err());
    }
}
