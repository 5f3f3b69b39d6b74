from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel


class BaseSchema(BaseModel):
    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        frozen=True,
        # Element는 pydantic 모델이 아니므로 임의 타입을 허용
        arbitrary_types_allowed=True,
    )
