use crate::document::Document;

fn row(out: &mut String, key: &str, value: impl AsRef<str>) {
    out.push_str(&format!("{key:<14}{}\n", value.as_ref()));
}

/// `3/1` reads as `3` in the table.
fn short(x: &str) -> &str {
    x.strip_suffix("/1").unwrap_or(x)
}

fn list(v: &[String], sep: &str) -> String {
    v.iter().map(|x| short(x)).collect::<Vec<_>>().join(sep)
}

fn point(p: &[String]) -> String {
    format!("({})", list(p, ", "))
}

pub fn render(doc: &Document) -> String {
    let mut out = String::new();
    let i = &doc.input;
    row(&mut out, "ideal", format!("({}) in {}", i.generators.join(", "), i.vars.join(" ")));
    row(&mut out, "valuation", format!("dehom {}, order {}", i.dehom, i.order.join(" ")));
    row(&mut out, "exact", if doc.exact { "yes" } else { "no, sampled inner approximation" });
    if let Some(b) = &doc.body {
        let verts: Vec<String> = b.polyhedron.vertices.iter().map(|v| point(v)).collect();
        row(&mut out, "vertices", verts.join(" "));
        row(&mut out, "rays", b.ray_count.to_string());
        if let Some(s) = &b.stabilization {
            row(&mut out, "stabilized", format!("{} (since t = {}, t_max = {})", s.stabilized, s.stable_since, s.t_max));
        }
    }
    if let Some(s) = &doc.slice {
        let verts: Vec<String> = s.vertices.iter().map(|v| point(v)).collect();
        row(&mut out, "slice", format!("level {}: {}", short(&s.level), verts.join(" ")));
        row(&mut out, "slice volume", short(&s.normalized_volume));
    }
    if let Some(f) = &doc.fiber_volume {
        for p in &f.function.pieces {
            let range = match &p.to {
                Some(to) => format!("[{}, {}]", short(&p.from), short(to)),
                None => format!("[{}, oo)", short(&p.from)),
            };
            row(&mut out, "fiber volume", format!("{range:<14}{}", p.display));
        }
    }
    if let Some(r) = &doc.integral {
        row(&mut out, "integral", &r.display);
    }
    if let Some(s) = &doc.sigma {
        row(&mut out, "sigma", list(s, " "));
    }
    if let Some(z) = &doc.zeta {
        row(&mut out, "zeta", &z.display);
        row(&mut out, "series", list(&z.series, " "));
        row(&mut out, "degrees used", z.degree_sequence_used.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
    }
    if let Some(c) = &doc.crosscheck {
        row(&mut out, "crosscheck", &c.status);
    }
    if let Some(ix) = &doc.index {
        row(&mut out, "index", format!("{} at s = {}", short(&ix.value), short(&ix.level)));
        if let Some(f) = &ix.formula {
            row(&mut out, "tail value", short(f));
        }
    }
    for c in &doc.checks {
        row(&mut out, "check", format!("{} {} {}", c.name, if c.passed { "ok" } else { "FAILED" }, c.detail));
    }
    for w in &doc.warnings {
        row(&mut out, "warning", w);
    }
    for t in doc.timings.iter().flatten() {
        row(&mut out, "time", format!("{} {:.6}s", t.stage, t.seconds));
    }
    out
}
