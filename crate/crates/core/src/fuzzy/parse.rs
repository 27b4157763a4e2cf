use super::{AlphaGrid, FuzzyError, FuzzyNumber};

/// Parses the command-line shorthand forms `tri:a,b,c`, `crisp:r` and `zero`.
pub fn parse_shorthand(input: &str, grid: AlphaGrid) -> Result<FuzzyNumber, FuzzyError> {
    let fail = |reason: &str| FuzzyError::Parse {
        input: input.to_owned(),
        reason: reason.to_owned(),
    };
    let text = input.trim();
    if text == "zero" {
        return Ok(FuzzyNumber::zero_hat(grid));
    }
    let (kind, args) = text
        .split_once(':')
        .ok_or_else(|| fail("expected `tri:a,b,c`, `crisp:r` or `zero`"))?;
    let values = args
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| fail(&e.to_string()))?;
    match (kind.trim(), values.as_slice()) {
        ("tri", &[a, b, c]) => FuzzyNumber::triangular(a, b, c, grid),
        ("tri", _) => Err(fail("`tri` takes exactly three numbers")),
        ("crisp", &[r]) => FuzzyNumber::crisp(r, grid),
        ("crisp", _) => Err(fail("`crisp` takes exactly one number")),
        (other, _) => Err(fail(&format!("unknown form `{other}`"))),
    }
}
