//! Evidence and query parsing for the `infer` command.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use situnet::bln::{Atom, Evidence, GroundNetwork};

/// `Rel(a,b)=true|false`.
pub fn parse_evidence(text: &str) -> Result<(Atom, bool)> {
    let (atom, value) = text
        .rsplit_once('=')
        .with_context(|| format!("evidence {text:?}: expected Atom=true or Atom=false"))?;
    let value = match value.trim() {
        "true" | "1" => true,
        "false" | "0" => false,
        v => bail!("evidence {text:?}: value {v:?} is not true or false"),
    };
    let atom: Atom = atom
        .trim()
        .parse()
        .map_err(|e| anyhow::anyhow!("evidence {text:?}: {e}"))?;
    Ok((atom, value))
}

/// A query such as `AtLocation(obj1,*)`; `*` matches any relation or argument.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryPattern {
    pub relation: Option<String>,
    pub args: Vec<Option<String>>,
}

impl QueryPattern {
    pub fn parse(text: &str) -> Result<QueryPattern> {
        let text = text.trim();
        let open = text
            .find('(')
            .with_context(|| format!("query {text:?}: expected Rel(arg,...)"))?;
        let inner = text[open + 1..]
            .strip_suffix(')')
            .with_context(|| format!("query {text:?}: missing closing parenthesis"))?;
        let wild = |s: &str| {
            let s = s.trim();
            (s != "*").then(|| s.to_string())
        };
        let relation = wild(&text[..open]);
        let args: Vec<Option<String>> = inner.split(',').map(wild).collect();
        if args.iter().any(|a| a.as_deref() == Some("")) {
            bail!("query {text:?}: empty argument");
        }
        Ok(QueryPattern { relation, args })
    }

    pub fn matches(&self, atom: &Atom) -> bool {
        self.relation.as_deref().is_none_or(|r| r == atom.relation.as_str())
            && atom.args.len() == self.args.len()
            && self
                .args
                .iter()
                .zip(&atom.args)
                .all(|(p, a)| p.as_deref().is_none_or(|p| p == a))
    }

    /// The first argument when it is not a wildcard.
    pub fn object(&self) -> Option<&str> {
        self.args.first().and_then(|a| a.as_deref())
    }
}

/// Objects named as first argument by the evidence and queries, in order.
pub fn objects<'a>(evidence: &'a [(Atom, bool)], queries: &'a [QueryPattern]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    evidence
        .iter()
        .filter_map(|(a, _)| a.args.first().map(String::as_str))
        .chain(queries.iter().filter_map(QueryPattern::object))
        .filter(|o| seen.insert(o.to_string()))
        .map(str::to_string)
        .collect()
}

/// Up to three variable names closest to `name`.
pub fn near_matches(net: &GroundNetwork, name: &str) -> Vec<String> {
    let mut scored: Vec<(f64, &String)> = net.names().iter().map(|n| (strsim::jaro_winkler(name, n), n)).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    scored.into_iter().take(3).map(|(_, n)| n.clone()).collect()
}

pub fn resolve_evidence(net: &GroundNetwork, evidence: &[(Atom, bool)]) -> Result<Evidence> {
    let mut out = Evidence::new();
    for (atom, value) in evidence {
        let name = atom.to_string();
        match net.var(&name) {
            Some(v) => {
                out.insert(v, *value);
            }
            None => bail!(
                "unknown variable {name}; did you mean {}?",
                near_matches(net, &name).join(", ")
            ),
        }
    }
    Ok(out)
}

/// Variables matching any pattern, in network order.
pub fn resolve_queries(net: &GroundNetwork, patterns: &[QueryPattern], raw: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (p, text) in patterns.iter().zip(raw) {
        let hits: Vec<usize> = (0..net.len())
            .filter(|&v| !net.auxiliary().contains(&v))
            .filter(|&v| net.name(v).parse::<Atom>().is_ok_and(|a| p.matches(&a)))
            .collect();
        if hits.is_empty() {
            bail!(
                "query {text} matches no variable; did you mean {}?",
                near_matches(net, text).join(", ")
            );
        }
        for v in hits {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evidence_syntax() {
        let (a, v) = parse_evidence("IsA(obj1,sock)=true").unwrap();
        assert_eq!(a.to_string(), "IsA(obj1,sock)");
        assert!(v);
        assert!(!parse_evidence("IsA(obj1,sock)=false").unwrap().1);
        assert!(parse_evidence("IsA(obj1,sock)").is_err());
        assert!(parse_evidence("IsA(obj1,sock)=maybe").is_err());
    }

    #[test]
    fn wildcard_patterns() {
        let p = QueryPattern::parse("AtLocation(obj1,*)").unwrap();
        assert_eq!(p.object(), Some("obj1"));
        assert!(p.matches(&"AtLocation(obj1,dresser)".parse().unwrap()));
        assert!(!p.matches(&"AtLocation(obj2,dresser)".parse().unwrap()));
        assert!(!p.matches(&"IsA(obj1,dresser)".parse().unwrap()));
        let any = QueryPattern::parse("*(obj1,*)").unwrap();
        assert!(any.matches(&"UsedFor(obj1,wash)".parse().unwrap()));
        assert!(QueryPattern::parse("AtLocation obj1").is_err());
    }

    #[test]
    fn objects_in_first_seen_order() {
        let ev = vec![parse_evidence("IsA(b,sock)=true").unwrap()];
        let qs = vec![
            QueryPattern::parse("IsA(a,*)").unwrap(),
            QueryPattern::parse("IsA(b,*)").unwrap(),
        ];
        assert_eq!(objects(&ev, &qs), ["b", "a"]);
    }
}
