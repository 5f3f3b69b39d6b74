"""cli 패키지: 문법, JSON 스키마, 샘플러, 명령행, 성질 검사 워크플로"""
