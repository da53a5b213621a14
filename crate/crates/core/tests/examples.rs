macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(partitions, "partitions.rs");
example!(polynomials, "polynomials.rs");
example!(straighten, "straighten.rs");
example!(spin_kostka, "spin_kostka.rs");
example!(closed_forms, "closed_forms.rs");
example!(schur_b, "schur_b.rs");
example!(square_g, "square_g.rs");
example!(oracle, "oracle.rs");
example!(relations, "relations.rs");
example!(table, "table.rs");
