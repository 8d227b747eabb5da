//! Finite label sets and their compositions.

mod composition;
mod enumerate;
mod label;
mod set;

pub use composition::Composition;
pub use enumerate::{
    compositions, compositions_with_bound, decompositions, ordered_bell, refinements,
    Compositions, DEFAULT_COMPOSITION_BOUND,
};
pub use label::{Label, MAX_NAME_LEN};
pub use set::FiniteSet;

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn set(s: &[u32]) -> FiniteSet {
        s.iter().map(|&v| Label::Int(v)).collect()
    }

    #[test]
    fn concat_and_restrict() {
        assert_eq!(c("(12,3)").concat(&c("(4)")).unwrap(), c("(12,3,4)"));
        assert_eq!(Composition::empty().concat(&c("(1,2)")).unwrap(), c("(1,2)"));
        assert_eq!(c("(2,1)").concat(&c("(43)")).unwrap(), c("(2,1,43)"));
        assert!(c("(1,2)").concat(&c("(2)")).is_err());
        assert_eq!(c("(13,2)").restrict(&set(&[1, 2])).unwrap(), c("(1,2)"));
        assert_eq!(c("(123)").restrict(&set(&[])).unwrap(), Composition::empty());
        assert_eq!(c("(13,24)").restrict(&set(&[3, 4])).unwrap(), c("(3,4)"));
        assert!(c("(1,2)").restrict(&set(&[3])).is_err());
    }

    #[test]
    fn opposite_and_order() {
        assert_eq!(c("(12,3)").opposite(), c("(3,12)"));
        assert_eq!(c("(1,2,3)").opposite(), c("(3,2,1)"));
        assert_eq!(Composition::empty().opposite(), Composition::empty());
        assert!(c("(123)").coarsens(&c("(1,2,3)")).unwrap());
        assert!(c("(12,3)").coarsens(&c("(2,1,3)")).unwrap());
        assert!(!c("(13,2)").coarsens(&c("(1,2,3)")).unwrap());
        assert!(c("(1,2)").coarsens(&c("(1,3)")).is_err());
    }

    #[test]
    fn ratios() {
        let f = c("(1,2)");
        assert_eq!(f.length_ratio(&f).unwrap(), 1);
        assert_eq!(f.factorial_ratio(&f).unwrap(), 1);
        assert_eq!(f.length_ratio(&c("(12)")).unwrap(), 2);
        assert_eq!(f.factorial_ratio(&c("(12)")).unwrap(), 2);
        assert_eq!(c("(1,2,3)").length_ratio(&c("(12,3)")).unwrap(), 2);
        assert_eq!(c("(1,2,3)").factorial_ratio(&c("(12,3)")).unwrap(), 2);
        assert_eq!(c("(1,2,3)").factorial_ratio(&c("(123)")).unwrap(), 6);
        assert!(c("(12)").length_ratio(&c("(1,2)")).is_err());
    }

    #[test]
    fn tits() {
        let f = c("(12,3)");
        assert_eq!(f.tits(&f).unwrap(), f);
        assert_eq!(f.tits(&c("(13,2)")).unwrap(), c("(1,2,3)"));
        assert_eq!(c("(123)").tits(&c("(2,13)")).unwrap(), c("(2,13)"));
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(c("( )"), Composition::empty());
        assert_eq!(c("()"), Composition::empty());
        assert_eq!(c("(10 11,3)").to_string(), "(10 11,3)");
        assert_eq!(c("(*1 2,a)").lumps()[0], FiniteSet::try_new([Label::Fresh(1), Label::Int(2)]).unwrap());
        assert_eq!(c("(*1 2,a)").to_string(), "(2*1,a)");
        assert_eq!(c("(2*1,a)"), c("(*1 2,a)"));
        assert!("(1,1)".parse::<Composition>().is_err());
        assert!("(1,)".parse::<Composition>().is_err());
        let json = serde_json::to_string(&c("(12,3)")).unwrap();
        assert_eq!(json, "[[1,2],[3]]");
        assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), c("(12,3)"));
        assert!(serde_json::from_str::<Composition>("[[1],[1]]").is_err());
        assert!(serde_json::from_str::<Composition>("[[]]").is_err());
    }

    #[test]
    fn deshuffle_and_channels() {
        let f = c("(1,2,3)");
        assert_eq!(f.deshuffle(&set(&[1, 3])), Some(c("(1,3)")));
        assert_eq!(c("(12,3)").deshuffle(&set(&[1, 3])), None);
        assert_eq!(
            f.two_lump_coarsenings(),
            vec![(set(&[1]), set(&[2, 3])), (set(&[1, 2]), set(&[3]))]
        );
    }
}
