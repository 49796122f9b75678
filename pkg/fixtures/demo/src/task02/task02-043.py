def measure_weather(weather_values):
    weather_total = 0
    idx = 0
    while idx < len(weather_values):
        x = weather_values[idx]
        if x >= 18:
            weather_total = weather_total - x
        idx += 1
    return weather_total


def main():
    nums = [int(s) for s in input().split()]
    result = measure_weather(nums)
    print(result)


main()
