//! SVG rendering of certificates as triangle diagrams: one triangle per
//! element, apex on the upper line at its extension rank, base interval on
//! the lower line. Output is byte-stable for a fixed certificate.

use linsemi::semiorder::Certificate;

const UPPER_Y: f64 = 0.0;
const LOWER_Y: f64 = 100.0;
const X_SCALE: f64 = 40.0;

pub fn certificate_svg(cert: &Certificate) -> String {
    let n = cert.names().len();
    let rep = cert.representation();
    let denom = rep.denominator() as f64;
    let width = X_SCALE * n as f64 + 40.0;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"-20 -20 {width} 140\" width=\"{width}\" height=\"140\">\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{UPPER_Y}\" x2=\"{}\" y2=\"{UPPER_Y}\" stroke=\"black\"/>\n",
        -10.0,
        width - 30.0
    ));
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{LOWER_Y}\" x2=\"{}\" y2=\"{LOWER_Y}\" stroke=\"black\"/>\n",
        -10.0,
        width - 30.0
    ));
    for v in 0..n {
        let apex_x = X_SCALE * cert.extension().position(v) as f64;
        let (left, right) = rep.interval(v);
        let left_x = X_SCALE * left as f64 / denom;
        let right_x = X_SCALE * right as f64 / denom;
        svg.push_str(&format!(
            "  <polygon points=\"{apex_x},{UPPER_Y} {right_x},{LOWER_Y} {left_x},{LOWER_Y}\" \
             fill=\"gray\" fill-opacity=\"0.5\" stroke=\"black\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{apex_x}\" y=\"-6\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
            cert.names()[v]
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use linsemi::poset::LinearOrder;
    use linsemi::samples;
    use linsemi::semiorder::build_certificate;

    #[test]
    fn chevron_certificate_renders_six_triangles() {
        let p = samples::chevron_dual();
        let cert = build_certificate(&p, &LinearOrder::identity(6)).unwrap();
        let svg = certificate_svg(&cert);
        assert_eq!(svg.matches("<polygon").count(), 6);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let p = samples::chevron_dual();
        let cert = build_certificate(&p, &LinearOrder::identity(6)).unwrap();
        assert_eq!(certificate_svg(&cert), certificate_svg(&cert));
    }
}
